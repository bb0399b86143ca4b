#pragma once

/**
 * @file localization.hpp
 * @brief Decorated torus-fixed graphs and the signs attached to them.
 *
 * Only the quotient by the involution is stored: the vertex set V_+,
 * the real edges (each joins a vertex v to its conjugate, so it is kept as
 * a loop [v, v]), and one representative per conjugate pair of edges. A real
 * edge contributes one incidence to its vertex, a conjugate pair one
 * incidence to each listed end, so that
 *
 *     sum_v |E_v| = |E_R| + 2 |E_+| = |Edg|.
 *
 * Genus and degree of the underlying map are derived, never stored:
 *
 *     g = 1 + |Edg| + 2 sum_v (genus(v) - 1),
 *     d = sum_{E_R} deg + 2 sum_{E_+} deg.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "realgw/errors.hpp"
#include "realgw/rational.hpp"
#include "realgw/sign_calculus.hpp"

namespace realgw {

enum class InvolutionKind { Tau, Eta };
enum class EdgeKind { Real, ConjugatePair };

struct FlagDecoration {
  Int b = 0;
  Int p = 0;
  bool in_s_minus = false;

  friend bool operator==(const FlagDecoration&, const FlagDecoration&) = default;
};

struct GraphVertex {
  Int genus = 0;
  Int theta = 1;
  std::vector<FlagDecoration> flags;

  friend bool operator==(const GraphVertex&, const GraphVertex&) = default;
};

struct GraphEdge {
  EdgeKind kind = EdgeKind::Real;
  Int degree = 1;
  std::array<std::size_t, 2> ends{0, 0};

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct DecoratedGraph {
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;
  Int n = 1;
  std::vector<Int> a;
  InvolutionKind phi = InvolutionKind::Tau;

  Int k() const { return static_cast<Int>(a.size()); }

  Int abs_a() const {
    Int s = 0;
    for (Int x : a) s += x;
    return s;
  }

  Int real_edge_count() const {
    Int r = 0;
    for (const auto& e : edges) r += e.kind == EdgeKind::Real ? 1 : 0;
    return r;
  }

  Int conj_edge_count() const { return static_cast<Int>(edges.size()) - real_edge_count(); }

  /// |E_v| for every vertex.
  std::vector<Int> valences() const {
    std::vector<Int> val(vertices.size(), 0);
    for (const auto& e : edges) {
      if (e.kind == EdgeKind::Real) {
        ++val[e.ends[0]];
      } else {
        ++val[e.ends[0]];
        ++val[e.ends[1]];
      }
    }
    return val;
  }

  void validate() const {
    detail::require(!vertices.empty(), "graph: needs at least one vertex");
    detail::require(n >= 1, "graph: n must be positive");
    for (Int ai : a) detail::require(ai >= 1, "graph: multidegree entries must be positive");
    detail::require(parity::is_even(n - k()), "graph: n - k must be even");
    for (const auto& v : vertices) {
      detail::require(v.genus >= 0, "graph: vertex genus must be nonnegative");
      detail::require(v.theta >= 1, "graph: vertex label theta must be at least 1");
      for (const auto& f : v.flags) {
        detail::require(f.b >= 0 && f.p >= 0, "graph: flag decorations must be nonnegative");
      }
    }
    for (const auto& e : edges) {
      detail::require(e.degree >= 1, "graph: edge degree must be at least 1");
      detail::require(e.ends[0] < vertices.size() && e.ends[1] < vertices.size(),
                      "graph: edge end is not a vertex");
      detail::require(e.kind != EdgeKind::Real || e.ends[0] == e.ends[1],
                      "graph: a real edge must list the same quotient vertex twice");
    }
  }

  friend bool operator==(const DecoratedGraph&, const DecoratedGraph&) = default;
};

struct GenusDegree {
  Int g = 0;
  Int d = 0;
};

inline GenusDegree derive_genus_degree(const DecoratedGraph& graph) {
  graph.validate();
  GenusDegree out;
  Int edge_total = graph.real_edge_count() + 2 * graph.conj_edge_count();
  Int genus_excess = 0;
  for (const auto& v : graph.vertices) genus_excess += v.genus - 1;
  out.g = 1 + edge_total + 2 * genus_excess;
  for (const auto& e : graph.edges) {
    out.d += e.kind == EdgeKind::Real ? e.degree : 2 * e.degree;
  }
  return out;
}

/// Exponent of the sign of the union isomorphism over the real edges:
/// (n + (k + |a|)/2) * C(|E_R|, 2) mod 2.
inline int epsilon_gamma(const DecoratedGraph& graph) {
  graph.validate();
  Int k = graph.k();
  Int sum_a = graph.abs_a();
  detail::require(parity::is_even(k + sum_a), "epsilon: |a| and k must have the same parity");
  Int factor = graph.n + (k + sum_a) / 2;
  return parity::is_even(factor) ? 0 : parity::binom2(graph.real_edge_count());
}

/// |phi| + (deg+1)/2 + floor((n - |a|) deg / 4) mod 2 for a real edge of odd degree.
inline int real_edge_exponent(InvolutionKind phi, Int n, Int abs_a, Int degree) {
  detail::require(degree >= 1 && !parity::is_even(degree),
                  "real edge: degree must be odd (even degrees contribute zero)");
  detail::require(parity::is_even(n - abs_a), "real edge: n - |a| must be even");
  Int floor_term = static_cast<Int>(Rational(Integer(n - abs_a) * degree, 4).floor());
  Int phi_bit = phi == InvolutionKind::Eta ? 1 : 0;
  return parity::of(phi_bit + (degree + 1) / 2 + floor_term);
}

/// (n - |a|) deg / 2 - 1 mod 2 for a conjugate pair of edges.
inline int conj_edge_exponent(Int n, Int abs_a, Int degree) {
  detail::require(degree >= 1, "conjugate edge: degree must be positive");
  detail::require(parity::is_even((n - abs_a) * degree),
                  "conjugate edge: (n - |a|) * degree must be even");
  return parity::of((n - abs_a) * degree / 2 - 1);
}

/// sum over flags in S_v^- of (1 + b + p), mod 2.
inline int vertex_exponent(const GraphVertex& v) {
  int acc = 0;
  for (const auto& f : v.flags) {
    if (f.in_s_minus) acc ^= parity::of(1 + f.b + f.p);
  }
  return acc;
}

struct CongruenceReport {
  bool holds = false;
  int lhs = 0;
  int rhs = 0;
};

namespace detail {

inline int parity_of_integral(const Rational& value, const char* what) {
  require(value.is_integer(), std::string("congruence: non-integral intermediate in ") + what);
  return static_cast<int>(boost::multiprecision::abs(value.numerator()) % 2);
}

}  // namespace detail

/// Evaluates both sides of the mod-2 identity
///
///   (n-2-k)/2 C(|E_R|,2) + sum_{E_R} (1 + floor((n-|a|) deg/4))
///     + sum_{E_+} ((n-|a|) deg/2 - 1) + sum_v (genus(v) - 1 + |E_v|)
///   == 1/2 (g + (n-|a|) d/2)(g + (n-|a|) d/2 - 1) + (g - 1)
///
/// in exact arithmetic. Requires |a| = k mod 4, odd real-edge degrees, and
/// n - |a| even.
inline CongruenceReport congruence_identity_check(const DecoratedGraph& graph) {
  graph.validate();
  const Int k = graph.k();
  const Int sum_a = graph.abs_a();
  detail::require(parity::floor_mod(sum_a - k, 4) == 0, "congruence: |a| must equal k mod 4");
  detail::require(parity::is_even(graph.n - sum_a), "congruence: n - |a| must be even");
  for (const auto& e : graph.edges) {
    detail::require(e.kind != EdgeKind::Real || !parity::is_even(e.degree),
                    "congruence: every real edge degree must be odd");
  }

  const auto [g, d] = derive_genus_degree(graph);
  const Rational span(graph.n - sum_a);
  const Int r = graph.real_edge_count();

  Rational lhs = Rational(Integer(graph.n - 2 - k), 2) * Rational(Integer(r) * (r - 1), 2);
  detail::parity_of_integral(lhs, "the real-edge pairing term");
  for (const auto& e : graph.edges) {
    if (e.kind == EdgeKind::Real) {
      Rational quarter = span * Rational(e.degree) / Rational(4);
      lhs += Rational(1) + Rational(quarter.floor());
    } else {
      Rational half = span * Rational(e.degree) / Rational(2);
      detail::parity_of_integral(half, "a conjugate-edge term");
      lhs += half - Rational(1);
    }
  }
  std::vector<Int> val = graph.valences();
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    lhs += Rational(graph.vertices[i].genus - 1 + val[i]);
  }

  Rational x = Rational(g) + span * Rational(d) / Rational(2);
  detail::parity_of_integral(x, "g + (n-|a|)d/2");
  Rational rhs = Rational(Integer(1), Integer(2)) * x * (x - Rational(1)) + Rational(g - 1);

  CongruenceReport out;
  out.lhs = detail::parity_of_integral(lhs, "the left-hand side");
  out.rhs = detail::parity_of_integral(rhs, "the right-hand side");
  out.holds = out.lhs == out.rhs;
  return out;
}

/// Upper limits for generate_random_graph. Lower limits are the natural
/// ones (one vertex, zero edges, genus 0, degree 1, n = 1, k = 0).
struct GraphBounds {
  int max_vertices = 4;
  int max_real_edges = 4;
  int max_conj_edges = 3;
  int max_vertex_genus = 3;
  int max_degree = 7;
  int max_n = 12;
  int max_k = 4;
  int max_a = 7;
  int max_flags = 3;
  int max_flag_value = 3;
};

namespace detail {

// Bounded draw from a fixed engine; avoids the implementation-defined
// std::uniform_int_distribution so graphs are identical across standard libraries.
class GraphRng {
 public:
  explicit GraphRng(std::uint64_t seed) : engine_(seed) {}

  Int draw(Int lo, Int hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<Int>(engine_() % span);
  }
  bool coin() { return (engine_() >> 11) & 1U; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace detail

/// A random graph meeting every structural invariant and the conditions
/// congruence_identity_check needs. Deterministic in seed.
inline DecoratedGraph generate_random_graph(std::uint64_t seed, const GraphBounds& bounds) {
  detail::require(bounds.max_vertices >= 1, "generator: need max_vertices >= 1");
  detail::require(bounds.max_degree >= 1, "generator: need max_degree >= 1");
  detail::require(bounds.max_n >= 1, "generator: need max_n >= 1");
  detail::require(bounds.max_real_edges >= 0 && bounds.max_conj_edges >= 0 &&
                      bounds.max_vertex_genus >= 0 && bounds.max_k >= 0 &&
                      bounds.max_flags >= 0 && bounds.max_flag_value >= 0,
                  "generator: bounds must be nonnegative");
  detail::require(bounds.max_k == 0 || bounds.max_a >= 1, "generator: need max_a >= 1 when k > 0");

  // Feasible (n, k): n - k even. An all-ones multidegree always gives |a| = k.
  std::vector<std::array<Int, 2>> nk;
  for (Int n = 1; n <= bounds.max_n; ++n) {
    for (Int k = 0; k <= bounds.max_k; ++k) {
      if (parity::is_even(n - k)) nk.push_back({n, k});
    }
  }
  detail::require(!nk.empty(), "generator: no n <= max_n with n - k even for k <= max_k");

  detail::GraphRng rng(seed);
  DecoratedGraph g;
  const auto& pick = nk[static_cast<std::size_t>(rng.draw(0, static_cast<Int>(nk.size()) - 1))];
  g.n = pick[0];
  const Int k = pick[1];

  // Multidegree with |a| = k mod 4: draw, then repair by +-1 or +-2 steps
  // on single entries while staying in [1, max_a].
  g.a.resize(static_cast<std::size_t>(k));
  for (auto& ai : g.a) ai = rng.draw(1, bounds.max_a);
  for (int attempt = 0; k > 0 && parity::floor_mod(g.abs_a() - k, 4) != 0; ++attempt) {
    if (attempt > 64) {
      std::fill(g.a.begin(), g.a.end(), Int{1});
      break;
    }
    auto& ai = g.a[static_cast<std::size_t>(rng.draw(0, k - 1))];
    Int need = parity::floor_mod(k - g.abs_a(), 4);  // 1, 2 or 3
    Int step = need == 3 ? -1 : need;
    for (Int candidate : {step, step - 4, step + 4}) {
      if (ai + candidate >= 1 && ai + candidate <= bounds.max_a) {
        ai += candidate;
        break;
      }
    }
  }
  g.phi = rng.coin() ? InvolutionKind::Eta : InvolutionKind::Tau;

  const Int nv = rng.draw(1, bounds.max_vertices);
  for (Int i = 0; i < nv; ++i) {
    GraphVertex v;
    v.genus = rng.draw(0, bounds.max_vertex_genus);
    v.theta = rng.draw(1, g.n);
    const Int nf = rng.draw(0, bounds.max_flags);
    for (Int j = 0; j < nf; ++j) {
      FlagDecoration f;
      f.b = rng.draw(0, bounds.max_flag_value);
      f.p = rng.draw(0, bounds.max_flag_value);
      f.in_s_minus = rng.coin();
      v.flags.push_back(f);
    }
    g.vertices.push_back(std::move(v));
  }

  const Int max_odd = parity::is_even(bounds.max_degree) ? bounds.max_degree - 1 : bounds.max_degree;
  const Int real_edges = rng.draw(0, bounds.max_real_edges);
  for (Int i = 0; i < real_edges; ++i) {
    GraphEdge e;
    e.kind = EdgeKind::Real;
    e.degree = 2 * rng.draw(0, (max_odd - 1) / 2) + 1;
    auto v = static_cast<std::size_t>(rng.draw(0, nv - 1));
    e.ends = {v, v};
    g.edges.push_back(e);
  }
  const Int conj_edges = rng.draw(0, bounds.max_conj_edges);
  for (Int i = 0; i < conj_edges; ++i) {
    GraphEdge e;
    e.kind = EdgeKind::ConjugatePair;
    e.degree = rng.draw(1, bounds.max_degree);
    e.ends = {static_cast<std::size_t>(rng.draw(0, nv - 1)),
              static_cast<std::size_t>(rng.draw(0, nv - 1))};
    g.edges.push_back(e);
  }

  g.validate();
  return g;
}

}  // namespace realgw
