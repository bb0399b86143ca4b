#pragma once

/**
 * @file sign_registry.hpp
 * @brief Name-based access to the sign predicates, for command-line use.
 *
 * A predicate is looked up by id and evaluated on a map of string
 * parameters ("g" -> "1", "variant" -> "canonical", lists as "1:3:5").
 * Predicates that produce a sign exponent e report preserves = (e == 0);
 * boolean facts report preserves = the fact.
 */

#include <charconv>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "realgw/errors.hpp"
#include "realgw/localization.hpp"
#include "realgw/sign_calculus.hpp"

namespace realgw {

using ParamMap = std::map<std::string, std::string>;

struct SignResult {
  Comparison comparison;
  std::string condition;
};

struct SignPredicate {
  std::string id;
  std::vector<std::string> params;  // names accepted; variant-like ones documented inline
  std::function<SignResult(const ParamMap&)> eval;
};

namespace detail {

inline Int int_param(const ParamMap& p, const std::string& key) {
  auto it = p.find(key);
  require(it != p.end(), "missing parameter '" + key + "'");
  const std::string& s = it->second;
  Int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  require(ec == std::errc() && ptr == s.data() + s.size(),
          "parameter '" + key + "' must be an integer, got '" + s + "'");
  return v;
}

inline std::string str_param(const ParamMap& p, const std::string& key) {
  auto it = p.find(key);
  require(it != p.end(), "missing parameter '" + key + "'");
  return it->second;
}

inline bool bool_param(const ParamMap& p, const std::string& key) {
  std::string s = str_param(p, key);
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  throw DomainError("parameter '" + key + "' must be true or false, got '" + s + "'");
}

inline std::vector<Int> list_param(const ParamMap& p, const std::string& key) {
  std::string s = str_param(p, key);
  std::vector<Int> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(':', start);
    if (end == std::string::npos) end = s.size();
    ParamMap one{{key, s.substr(start, end - start)}};
    out.push_back(int_param(one, key));
    start = end + 1;
  }
  return out;
}

inline LemmaVariant lemma_variant(const ParamMap& p) {
  std::string v = str_param(p, "variant");
  if (v == "projection") return LemmaVariant::Projection;
  if (v == "canonical") return LemmaVariant::Canonical;
  throw DomainError("variant must be projection or canonical, got '" + v + "'");
}

inline CorollaryVariant corollary_variant(const ParamMap& p) {
  std::string v = str_param(p, "variant");
  if (v == "projection") return CorollaryVariant::ViaProjection;
  if (v == "canonical") return CorollaryVariant::ViaCanonical;
  throw DomainError("variant must be projection or canonical, got '" + v + "'");
}

inline CorollaryId corollary_id(const ParamMap& p) {
  std::string v = str_param(p, "id");
  if (v == "union") return CorollaryId::Union;
  if (v == "doublet") return CorollaryId::Doublet;
  if (v == "conj_node") return CorollaryId::ConjNode;
  if (v == "e_node") return CorollaryId::ENode;
  throw DomainError("unknown corollary id '" + v + "'");
}

inline PropositionId proposition_id(const ParamMap& p) {
  std::string v = str_param(p, "id");
  if (v == "union") return PropositionId::Union;
  if (v == "doublet") return PropositionId::Doublet;
  if (v == "conj_node") return PropositionId::ConjNode;
  if (v == "e_node") return PropositionId::ENode;
  if (v == "relspin") return PropositionId::RelSpin;
  if (v == "forget_boundary") return PropositionId::ForgetBoundary;
  throw DomainError("unknown proposition id '" + v + "'");
}

inline PropositionVariant proposition_variant(const ParamMap& p) {
  std::string v = str_param(p, "variant");
  if (v == "e2") return PropositionVariant::ViaE2;
  if (v == "e3") return PropositionVariant::ViaE3;
  if (v == "spin_e3") return PropositionVariant::SpinViaE3;
  throw DomainError("variant must be e2, e3 or spin_e3, got '" + v + "'");
}

inline RelSpinVariant relspin_variant(const ParamMap& p) {
  std::string v = str_param(p, "variant");
  if (v == "relspin_e2") return RelSpinVariant::RelSpinVsE2;
  if (v == "relspin_e3") return RelSpinVariant::RelSpinVsE3;
  if (v == "spin_e3") return RelSpinVariant::SpinVsE3;
  throw DomainError("variant must be relspin_e2, relspin_e3 or spin_e3, got '" + v + "'");
}

inline InvolutionKind involution(const ParamMap& p) {
  std::string v = str_param(p, "phi");
  if (v == "tau") return InvolutionKind::Tau;
  if (v == "eta") return InvolutionKind::Eta;
  throw DomainError("phi must be tau or eta, got '" + v + "'");
}

inline std::string corollary_condition(CorollaryId id, CorollaryVariant v) {
  const bool proj = v == CorollaryVariant::ViaProjection;
  switch (id) {
    case CorollaryId::Union:
      return proj ? "(g1-1)(g2-1) even" : "(g1-1)(g2-1) + (g1-1+d1)(g2-1+d2) even";
    case CorollaryId::Doublet: return proj ? "g-1+d2 even" : "always";
    case CorollaryId::ConjNode: return proj ? "never" : "always";
    case CorollaryId::ENode: return proj ? "g-1 even" : "d even";
  }
  return {};
}

inline std::string proposition_condition(PropositionId id, PropositionVariant v) {
  const bool e2 = v == PropositionVariant::ViaE2;
  switch (id) {
    case PropositionId::Union:
      return e2 ? "(n-1)(g1-1)(g2-1)/2 even"
                : "(n-1)(g1-1)(g2-1)/2 + (g1-1+c1B1/2)(g2-1+c1B2/2) even";
    case PropositionId::Doublet: return e2 ? "c1L_phiB + s_minus even" : "g-1 + s_minus even";
    case PropositionId::ConjNode: return e2 ? "always" : "never";
    case PropositionId::ENode: return e2 ? "never" : "g + c1B/2 even";
    case PropositionId::RelSpin:
      if (v == PropositionVariant::SpinViaE3) return "never (fixed-locus line bundle orientable)";
      return e2 ? "c1B not in 4Z" : "c1B = 2, 4 mod 8";
    case PropositionId::ForgetBoundary: return "node_side = plus";
  }
  return {};
}

}  // namespace detail

inline const std::vector<SignPredicate>& sign_predicates() {
  using namespace detail;
  static const std::vector<SignPredicate> table{
      {"cvc_parity", {"g", "k", "d"},
       [](const ParamMap& p) {
         return SignResult{cvc_parity(int_param(p, "g"), int_param(p, "k"), int_param(p, "d")),
                           "C(ind, 2) even, ind = (1-g)k + d"};
       }},
      {"conj_pullback_parity", {"g", "k", "d"},
       [](const ParamMap& p) {
         return SignResult{
             conj_pullback_parity(int_param(p, "g"), int_param(p, "k"), int_param(p, "d")),
             "(1-g)k + d even"};
       }},
      {"union_lemma", {"g1", "g2", "k", "d1", "d2", "variant"},
       [](const ParamMap& p) {
         auto v = lemma_variant(p);
         if (v == LemmaVariant::Projection) {
           return SignResult{union_lemma(0, 0, 1, 0, 0, v), "always"};
         }
         return SignResult{union_lemma(int_param(p, "g1"), int_param(p, "g2"), int_param(p, "k"),
                                       int_param(p, "d1"), int_param(p, "d2"), v),
                           "((1-g1)k+d1)((1-g2)k+d2) even"};
       }},
      {"doublet_lemma", {"g", "k", "d2", "variant"},
       [](const ParamMap& p) {
         auto v = lemma_variant(p);
         if (v == LemmaVariant::Canonical) {
           return SignResult{doublet_lemma(0, 1, 0, v), "always"};
         }
         return SignResult{
             doublet_lemma(int_param(p, "g"), int_param(p, "k"), int_param(p, "d2"), v),
             "(1-g)k + d2 even"};
       }},
      {"conj_node_lemma", {"k", "variant"},
       [](const ParamMap& p) {
         auto v = lemma_variant(p);
         return SignResult{conj_node_lemma(int_param(p, "k"), v),
                           v == LemmaVariant::Projection ? "k even" : "always"};
       }},
      {"e_node_lemma", {"g", "k", "d", "variant"},
       [](const ParamMap& p) {
         auto v = lemma_variant(p);
         return SignResult{
             e_node_lemma(int_param(p, "g"), int_param(p, "k"), int_param(p, "d"), v),
             v == LemmaVariant::Projection ? "k even" : "k(g+d) even"};
       }},
      {"induced_corollary", {"id", "variant", "g1", "g2", "d1", "d2", "g", "d"},
       [](const ParamMap& p) {
         auto id = corollary_id(p);
         auto v = corollary_variant(p);
         CorollaryParams cp;
         switch (id) {
           case CorollaryId::Union:
             cp.g1 = int_param(p, "g1");
             cp.g2 = int_param(p, "g2");
             if (v == CorollaryVariant::ViaCanonical) {
               cp.d1 = int_param(p, "d1");
               cp.d2 = int_param(p, "d2");
             }
             break;
           case CorollaryId::Doublet:
             if (v == CorollaryVariant::ViaProjection) {
               cp.g = int_param(p, "g");
               cp.d2 = int_param(p, "d2");
             }
             break;
           case CorollaryId::ConjNode: break;
           case CorollaryId::ENode:
             if (v == CorollaryVariant::ViaProjection) {
               cp.g = int_param(p, "g");
             } else {
               cp.d = int_param(p, "d");
             }
             break;
         }
         return SignResult{induced_corollary(id, cp, v), corollary_condition(id, v)};
       }},
      {"relspin_comparison", {"deg_v", "variant"},
       [](const ParamMap& p) {
         auto v = relspin_variant(p);
         const char* cond = v == RelSpinVariant::RelSpinVsE2   ? "deg V in 4Z"
                            : v == RelSpinVariant::RelSpinVsE3 ? "deg V = 0, 6 mod 8"
                                                               : "always (deg V in 4Z)";
         return SignResult{relspin_comparison(int_param(p, "deg_v"), v), cond};
       }},
      {"moduli_proposition",
       {"id", "variant", "n", "g1", "g2", "c1B1", "c1B2", "g", "c1L_phiB", "s_minus", "c1B",
        "node_side", "orientable"},
       [](const ParamMap& p) {
         auto id = proposition_id(p);
         auto v = proposition_variant(p);
         PropositionParams pp;
         switch (id) {
           case PropositionId::Union:
             pp.n = int_param(p, "n");
             pp.g1 = int_param(p, "g1");
             pp.g2 = int_param(p, "g2");
             if (v == PropositionVariant::ViaE3) {
               pp.c1B1 = int_param(p, "c1B1");
               pp.c1B2 = int_param(p, "c1B2");
             }
             break;
           case PropositionId::Doublet:
             pp.s_minus = int_param(p, "s_minus");
             if (v == PropositionVariant::ViaE2) {
               pp.c1L_phiB = int_param(p, "c1L_phiB");
             } else {
               pp.g = int_param(p, "g");
             }
             break;
           case PropositionId::ConjNode: break;
           case PropositionId::ENode:
             if (v != PropositionVariant::ViaE2) {
               pp.g = int_param(p, "g");
               pp.c1B = int_param(p, "c1B");
             }
             break;
           case PropositionId::RelSpin:
             pp.c1B = int_param(p, "c1B");
             if (v == PropositionVariant::SpinViaE3) pp.fixed_bundle_orientable = bool_param(p, "orientable");
             break;
           case PropositionId::ForgetBoundary: {
             std::string side = str_param(p, "node_side");
             require(side == "plus" || side == "minus", "node_side must be plus or minus");
             pp.node_side = side == "plus" ? NodeSide::Plus : NodeSide::Minus;
             break;
           }
         }
         return SignResult{moduli_proposition(id, pp, v), proposition_condition(id, v)};
       }},
      {"twist_exponent", {"g", "fixed_components"},
       [](const ParamMap& p) {
         return SignResult{Comparison::from_exponent(
                               twist_exponent(int_param(p, "g"), int_param(p, "fixed_components"))),
                           "(g-1) + |sigma| even"};
       }},
      {"line_conjugation_exists", {"has_fixed_locus", "g", "half_degree"},
       [](const ParamMap& p) {
         return SignResult{
             Comparison::when(line_conjugation_exists(bool_param(p, "has_fixed_locus"),
                                                      int_param(p, "g"), int_param(p, "half_degree"))),
             "fixed locus nonempty or g + d/2 odd"};
       }},
      {"ci_sum_parity", {"k", "a"},
       [](const ParamMap& p) {
         auto a = list_param(p, "a");
         return SignResult{Comparison::when(ci_parity_facts(int_param(p, "k"), a).sum_parity_ok),
                           "|a| = k mod 2"};
       }},
      {"ci_eta_mod4", {"k", "a"},
       [](const ParamMap& p) {
         auto a = list_param(p, "a");
         return SignResult{Comparison::when(ci_parity_facts(int_param(p, "k"), a).eta_mod4_ok),
                           "odd a_i even in number implies |a| = k mod 4"};
       }},
      {"arss_condition", {"deg_l", "m", "m1"},
       [](const ParamMap& p) {
         return SignResult{Comparison::when(arss_condition(int_param(p, "deg_l"), int_param(p, "m"),
                                                           int_param(p, "m1"))),
                           "deg L - m*m1 - C(m1, 2) in 4Z"};
       }},
      {"arss_cross_term", {"degs"},
       [](const ParamMap& p) {
         auto degs = list_param(p, "degs");
         return SignResult{Comparison::from_exponent(arss_cross_term(degs)),
                           "sum_{i<j} (1 + (d_i-1)(d_j-1)) even"};
       }},
      {"orientcomp_eps_conv", {"g", "c1B", "n"},
       [](const ParamMap& p) {
         auto e = orientcomp_epsilons(int_param(p, "g"), int_param(p, "c1B"), int_param(p, "n"));
         return SignResult{Comparison::from_exponent(e.eps_conv),
                           "(g + c1B/2)(g - 1 + c1B/2)/2 even"};
       }},
      {"orientcomp_eps_factor", {"g", "c1B", "n"},
       [](const ParamMap& p) {
         auto e = orientcomp_epsilons(int_param(p, "g"), int_param(p, "c1B"), int_param(p, "n"));
         return SignResult{Comparison::from_exponent(e.eps_factor),
                           "(n-1)/2 * g(g-1)/2 even"};
       }},
      {"real_edge_exponent", {"phi", "n", "abs_a", "degree"},
       [](const ParamMap& p) {
         return SignResult{Comparison::from_exponent(real_edge_exponent(
                               involution(p), int_param(p, "n"), int_param(p, "abs_a"),
                               int_param(p, "degree"))),
                           "|phi| + (deg+1)/2 + floor((n-|a|) deg/4) even"};
       }},
      {"conj_edge_exponent", {"n", "abs_a", "degree"},
       [](const ParamMap& p) {
         return SignResult{Comparison::from_exponent(conj_edge_exponent(
                               int_param(p, "n"), int_param(p, "abs_a"), int_param(p, "degree"))),
                           "(n-|a|) deg/2 - 1 even"};
       }},
  };
  return table;
}

/// Looks up and evaluates one predicate; unknown ids and unknown parameter
/// names are errors.
inline SignResult evaluate_sign(const std::string& id, const ParamMap& params) {
  for (const auto& pred : sign_predicates()) {
    if (pred.id != id) continue;
    for (const auto& [key, value] : params) {
      bool known = false;
      for (const auto& name : pred.params) known = known || name == key;
      detail::require(known, "predicate '" + id + "' takes no parameter '" + key + "'");
    }
    return pred.eval(params);
  }
  throw DomainError("unknown predicate '" + id + "'");
}

/// Splits "k=v,k2=v2" into a map. Empty input yields an empty map.
inline ParamMap parse_params(std::string_view text) {
  ParamMap out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    auto eq = item.find('=');
    detail::require(eq != std::string_view::npos && eq > 0,
                    "params: expected key=value, got '" + std::string(item) + "'");
    auto [it, inserted] =
        out.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
    detail::require(inserted, "params: duplicate key '" + it->first + "'");
    start = end + 1;
  }
  return out;
}

}  // namespace realgw
