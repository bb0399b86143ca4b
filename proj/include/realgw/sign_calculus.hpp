#pragma once

/**
 * @file sign_calculus.hpp
 * @brief Orientation comparisons reduced to parity predicates on integers.
 *
 * Each predicate answers whether a natural isomorphism between two
 * oriented lines (or a diagram of them) preserves orientation. The
 * geometry enters only through integer descriptors: arithmetic genus g
 * (negative for disconnected domains), complex rank k, degree d, and
 * pairings such as c1B = <c1(X), B>.
 *
 * Polarity convention: Comparison::preserves == true means "respects",
 * "commutes", "is the same", or "is orientation-preserving". Anything the
 * source statement calls "opposite" or "does not commute" is
 * preserves == false. Predicates returning a sign exponent return 0 or 1
 * with the orientation changing by (-1)^exponent.
 */

#include <cstdint>
#include <numeric>
#include <span>
#include <string>

#include "realgw/errors.hpp"

namespace realgw {

using Int = std::int64_t;

namespace parity {

constexpr Int floor_mod(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

constexpr bool is_even(Int x) { return x % 2 == 0; }
constexpr int of(Int x) { return is_even(x) ? 0 : 1; }

/// Parity of x(x-1)/2 for any integer x.
constexpr int binom2(Int x) { return floor_mod(x, 4) >= 2 ? 1 : 0; }

}  // namespace parity

struct Comparison {
  bool preserves = true;

  static constexpr Comparison when(bool condition) { return Comparison{condition}; }
  static constexpr Comparison when_even(Int x) { return Comparison{parity::is_even(x)}; }
  static constexpr Comparison from_exponent(int e) { return Comparison{e == 0}; }

  constexpr int sign() const { return preserves ? 1 : -1; }
  constexpr bool flips() const { return !preserves; }
  constexpr int exponent() const { return preserves ? 0 : 1; }

  /// Composition of two comparisons: signs multiply.
  constexpr Comparison operator*(Comparison o) const {
    return Comparison{preserves == o.preserves};
  }
  friend constexpr bool operator==(Comparison, Comparison) = default;
};

/// Integer shadow of a real bundle pair over a symmetric surface.
struct RealBundleDescriptor {
  Int genus = 0;
  Int rank = 1;
  Int degree = 0;
  bool has_conjugation = false;

  void validate() const { detail::require(rank >= 1, "bundle: rank must be at least 1"); }

  /// Complex index (1-g)k + d of a CR-operator on the bundle.
  Int index() const { return (1 - genus) * rank + degree; }
};

/// Integer shadow of a real map moduli problem.
struct ModuliDescriptor {
  Int g = 0;
  Int ell = 0;
  Int n = 3;
  Int c1B = 0;

  void validate() const {
    detail::require(ell >= 0, "moduli: ell must be nonnegative");
    detail::require(n >= 1 && !parity::is_even(n), "moduli: n must be an odd positive integer");
    detail::require(parity::is_even(c1B), "moduli: c1B must be even");
  }
};

enum class LemmaVariant { Projection, Canonical };

namespace detail {
inline void require_rank(Int k) { require(k >= 1, "rank k must be at least 1"); }
}  // namespace detail

// --- Comparisons of determinant-line orientations --------------------------

/// Canonical orientation on det D_{2(L)} vs projection orientation on
/// det D_{L + conj L}: preserves iff C(ind, 2) is even, ind = (1-g)k + d.
inline Comparison cvc_parity(Int g, Int k, Int d) {
  detail::require_rank(k);
  return Comparison::when(parity::binom2((1 - g) * k + d) == 0);
}

inline Comparison cvc_parity(const RealBundleDescriptor& b) {
  b.validate();
  return cvc_parity(b.genus, b.rank, b.degree);
}

/// Pullback by the conjugation respects complex orientations iff the index is even.
inline Comparison conj_pullback_parity(Int g, Int k, Int d) {
  detail::require_rank(k);
  return Comparison::when_even((1 - g) * k + d);
}

inline Comparison conj_pullback_parity(const RealBundleDescriptor& b) {
  b.validate();
  return conj_pullback_parity(b.genus, b.rank, b.degree);
}

/// Disjoint union of two surfaces.
inline Comparison union_lemma(Int g1, Int g2, Int k, Int d1, Int d2, LemmaVariant v) {
  detail::require_rank(k);
  if (v == LemmaVariant::Projection) return Comparison::when(true);
  return Comparison::when_even(((1 - g1) * k + d1) * ((1 - g2) * k + d2));
}

/// Restriction from a doublet of genus 2g-1 to one of its halves.
/// d2 is the degree of L on the second half.
inline Comparison doublet_lemma(Int g, Int k, Int d2, LemmaVariant v) {
  detail::require_rank(k);
  if (v == LemmaVariant::Canonical) return Comparison::when(true);
  return Comparison::when_even((1 - g) * k + d2);
}

inline Comparison doublet_lemma(const RealBundleDescriptor& second_half, LemmaVariant v) {
  second_half.validate();
  detail::require(v == LemmaVariant::Projection || second_half.has_conjugation,
                  "doublet: canonical variant needs a conjugation lift");
  return doublet_lemma(second_half.genus, second_half.rank, second_half.degree, v);
}

/// Normalization at a conjugate pair of nodes.
inline Comparison conj_node_lemma(Int k, LemmaVariant v) {
  detail::require_rank(k);
  if (v == LemmaVariant::Canonical) return Comparison::when(true);
  return Comparison::when_even(k);
}

/// Normalization at an E-node.
inline Comparison e_node_lemma(Int g, Int k, Int d, LemmaVariant v) {
  detail::require_rank(k);
  if (v == LemmaVariant::Projection) return Comparison::when_even(k);
  return Comparison::when_even(k * (g + d));
}

// --- Induced orientations via real orientations -----------------------------

enum class CorollaryId { Union, Doublet, ConjNode, ENode };
enum class CorollaryVariant { ViaProjection, ViaCanonical };

/// Parameters shared by the corollaries; each id reads only its own fields
/// (Union: g1 g2 d1 d2; Doublet: g d2; ConjNode: none; ENode: g d).
struct CorollaryParams {
  Int g1 = 0, g2 = 0, d1 = 0, d2 = 0;
  Int g = 0, d = 0;
};

inline Comparison induced_corollary(CorollaryId id, const CorollaryParams& p,
                                    CorollaryVariant v) {
  const bool projection = v == CorollaryVariant::ViaProjection;
  switch (id) {
    case CorollaryId::Union:
      if (projection) return Comparison::when_even((p.g1 - 1) * (p.g2 - 1));
      return Comparison::when_even((p.g1 - 1) * (p.g2 - 1) +
                                   (p.g1 - 1 + p.d1) * (p.g2 - 1 + p.d2));
    case CorollaryId::Doublet:
      if (projection) return Comparison::when_even(p.g - 1 + p.d2);
      return Comparison::when(true);
    case CorollaryId::ConjNode:
      return Comparison::when(!projection);
    case CorollaryId::ENode:
      if (projection) return Comparison::when_even(p.g - 1);
      return Comparison::when_even(p.d);
  }
  throw DomainError("corollary: unknown id");
}

enum class RelSpinVariant { RelSpinVsE2, RelSpinVsE3, SpinVsE3 };

/// Relative-spin vs real-orientation orientations over (P^1, tau).
inline Comparison relspin_comparison(Int deg_v, RelSpinVariant v) {
  detail::require(parity::is_even(deg_v), "relspin: deg V must be even");
  switch (v) {
    case RelSpinVariant::RelSpinVsE2:
      return Comparison::when(parity::floor_mod(deg_v, 4) == 0);
    case RelSpinVariant::RelSpinVsE3: {
      Int r = parity::floor_mod(deg_v, 8);
      return Comparison::when(r == 0 || r == 6);
    }
    case RelSpinVariant::SpinVsE3:
      detail::require(parity::floor_mod(deg_v, 4) == 0,
                      "relspin: spin comparison is only stated for deg V in 4Z");
      return Comparison::when(true);
  }
  throw DomainError("relspin: unknown variant");
}

// --- Moduli-space statements ------------------------------------------------

enum class PropositionId { Union, Doublet, ConjNode, ENode, RelSpin, ForgetBoundary };
enum class PropositionVariant { ViaE2, ViaE3, SpinViaE3 };
enum class NodeSide { Plus, Minus };

/// Parameters per id:
///   Union:          n g1 g2 c1B1 c1B2
///   Doublet:        g c1L_phiB s_minus (ViaE2), g s_minus (ViaE3)
///   ConjNode:       none
///   ENode:          g c1B
///   RelSpin:        c1B; SpinViaE3 also needs fixed_bundle_orientable
///   ForgetBoundary: node_side
struct PropositionParams {
  Int n = 3;
  Int g1 = 0, g2 = 0, c1B1 = 0, c1B2 = 0;
  Int g = 0, c1L_phiB = 0, s_minus = 0;
  Int c1B = 0;
  NodeSide node_side = NodeSide::Plus;
  bool fixed_bundle_orientable = false;
};

inline Comparison moduli_proposition(PropositionId id, const PropositionParams& p,
                                     PropositionVariant v) {
  detail::require(v != PropositionVariant::SpinViaE3 || id == PropositionId::RelSpin,
                  "proposition: the spin variant exists only for the relative-spin statement");
  const bool e2 = v == PropositionVariant::ViaE2;
  switch (id) {
    case PropositionId::Union: {
      detail::require(p.n >= 1 && !parity::is_even(p.n), "proposition: n must be odd");
      detail::require(parity::is_even(p.c1B1) && parity::is_even(p.c1B2),
                      "proposition: c1B1 and c1B2 must be even");
      Int base = (p.n - 1) / 2 * (p.g1 - 1) * (p.g2 - 1);
      if (e2) return Comparison::when_even(base);
      return Comparison::when_even(base + (p.g1 - 1 + p.c1B1 / 2) * (p.g2 - 1 + p.c1B2 / 2));
    }
    case PropositionId::Doublet:
      detail::require(p.s_minus >= 0, "proposition: |S^-| must be nonnegative");
      if (e2) return Comparison::when_even(p.c1L_phiB + p.s_minus);
      return Comparison::when_even(p.g - 1 + p.s_minus);
    case PropositionId::ConjNode:
      return Comparison::when(e2);
    case PropositionId::ENode:
      detail::require(parity::is_even(p.c1B), "proposition: c1B must be even");
      if (e2) return Comparison::when(false);
      return Comparison::when_even(p.g + p.c1B / 2);
    case PropositionId::RelSpin: {
      detail::require(parity::is_even(p.c1B), "proposition: c1B must be even");
      if (v == PropositionVariant::SpinViaE3) {
        detail::require(p.fixed_bundle_orientable,
                        "proposition: spin comparison is only stated when the fixed-locus "
                        "line bundle is orientable");
        return Comparison::when(false);
      }
      if (e2) return Comparison::when(parity::floor_mod(p.c1B, 4) != 0);
      Int r = parity::floor_mod(p.c1B, 8);
      return Comparison::when(r == 2 || r == 4);
    }
    case PropositionId::ForgetBoundary:
      return Comparison::when(p.node_side == NodeSide::Plus);
  }
  throw DomainError("proposition: unknown id");
}

// --- Integer facts ----------------------------------------------------------

/// Expected dimension (1-g)(n-3) + 2*ell + c1B.
inline Int virtual_dimension(const ModuliDescriptor& m) {
  m.validate();
  return (1 - m.g) * (m.n - 3) + 2 * m.ell + m.c1B;
}

/// Exponent of the final twist in the moduli orientation: (g-1) + |sigma| mod 2,
/// |sigma| the number of fixed circles.
inline int twist_exponent(Int g, Int fixed_components) {
  detail::require(fixed_components >= 0, "twist: number of fixed components must be nonnegative");
  return parity::of(g - 1 + fixed_components);
}

/// Whether a degree-2*half_degree line bundle over a genus-g symmetric
/// surface admits a conjugation lift compatible with a real orientation.
inline bool line_conjugation_exists(bool has_fixed_locus, Int g, Int half_degree) {
  detail::require(g >= 0, "line conjugation: genus must be nonnegative");
  return has_fixed_locus || !parity::is_even(g + half_degree);
}

struct CompleteIntersectionParity {
  bool sum_parity_ok = false;
  bool eta_mod4_ok = false;
};

/// k = number of defining equations, a = their degrees.
inline CompleteIntersectionParity ci_parity_facts(Int k, std::span<const Int> a) {
  detail::require(k >= 0, "complete intersection: k must be nonnegative");
  Int sum = 0;
  Int odd = 0;
  for (Int ai : a) {
    detail::require(ai >= 1, "complete intersection: degrees must be positive");
    sum += ai;
    if (!parity::is_even(ai)) ++odd;
  }
  CompleteIntersectionParity out;
  out.sum_parity_ok = parity::is_even(sum - k);
  out.eta_mod4_ok = !parity::is_even(odd) || parity::floor_mod(sum - k, 4) == 0;
  return out;
}

/// deg L - m*m1 - C(m1, 2) in 4Z.
inline bool arss_condition(Int deg_l, Int m, Int m1) {
  detail::require(m >= 1, "arss: m must be positive");
  detail::require(m1 >= 0 && m1 <= m, "arss: m1 must lie in [0, m]");
  return parity::floor_mod(deg_l - m * m1 - m1 * (m1 - 1) / 2, 4) == 0;
}

/// Parity of sum_{i<j} (1 + (d_i - 1)(d_j - 1)), one degree per sphere.
inline int arss_cross_term(std::span<const Int> degrees) {
  int acc = 0;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    for (std::size_t j = i + 1; j < degrees.size(); ++j) {
      acc ^= parity::of(1 + (degrees[i] - 1) * (degrees[j] - 1));
    }
  }
  return acc;
}

struct OrientationEpsilons {
  int eps_conv = 0;    // projection+E2 vs canonical+E3
  int eps_factor = 0;  // canonical vs projection on the trivial factors
};

inline OrientationEpsilons orientcomp_epsilons(Int g, Int c1B, Int n) {
  detail::require(parity::is_even(c1B), "epsilons: c1B must be even");
  detail::require(n >= 1 && !parity::is_even(n), "epsilons: n must be an odd positive integer");
  OrientationEpsilons out;
  out.eps_conv = parity::binom2(g + c1B / 2);
  out.eps_factor = parity::is_even((n - 1) / 2) ? 0 : parity::binom2(g);
  return out;
}

}  // namespace realgw
