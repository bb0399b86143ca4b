#include "realgw/localization.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gtest/gtest.h"

namespace realgw {
namespace {

GraphVertex vertex(Int genus, std::vector<FlagDecoration> flags = {}) {
  return GraphVertex{genus, 1, std::move(flags)};
}

GraphEdge real_edge(Int degree, std::size_t v) { return GraphEdge{EdgeKind::Real, degree, {v, v}}; }

GraphEdge conj_edge(Int degree, std::size_t a, std::size_t b) {
  return GraphEdge{EdgeKind::ConjugatePair, degree, {a, b}};
}

// Floor division for the oracle below.
Int floor_div(Int num, Int den) {
  Int q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

Int mod2(Int x) { return ((x % 2) + 2) % 2; }

// Both sides of the sign congruence in plain 64-bit integers, with |E_v|
// recounted from the edge list.
std::pair<int, int> congruence_oracle(const DecoratedGraph& gr) {
  Int k = static_cast<Int>(gr.a.size());
  Int sum_a = std::accumulate(gr.a.begin(), gr.a.end(), Int{0});
  Int span = gr.n - sum_a;
  Int real = 0, conj = 0, d = 0;
  Int lhs = 0;
  std::vector<Int> incidences(gr.vertices.size(), 0);
  for (const auto& e : gr.edges) {
    if (e.kind == EdgeKind::Real) {
      ++real;
      d += e.degree;
      lhs += 1 + floor_div(span * e.degree, 4);
      incidences[e.ends[0]] += 1;
    } else {
      ++conj;
      d += 2 * e.degree;
      lhs += span * e.degree / 2 - 1;
      incidences[e.ends[0]] += 1;
      incidences[e.ends[1]] += 1;
    }
  }
  Int g = 1 + real + 2 * conj;
  for (std::size_t i = 0; i < gr.vertices.size(); ++i) {
    g += 2 * (gr.vertices[i].genus - 1);
    lhs += gr.vertices[i].genus - 1 + incidences[i];
  }
  lhs += (gr.n - 2 - k) / 2 * (real * (real - 1) / 2);
  Int x = g + span * d / 2;
  Int rhs = x * (x - 1) / 2 + (g - 1);
  return {static_cast<int>(mod2(lhs)), static_cast<int>(mod2(rhs))};
}

TEST(DeriveGenusDegree, Examples) {
  DecoratedGraph one_real{{vertex(0, {FlagDecoration{}})}, {real_edge(1, 0)}, 5, {5}};
  auto gd = derive_genus_degree(one_real);
  EXPECT_EQ(gd.g, 0);
  EXPECT_EQ(gd.d, 1);

  DecoratedGraph pair{{vertex(0, {FlagDecoration{}}), vertex(0, {FlagDecoration{}})},
                      {conj_edge(1, 0, 1)}, 3, {1}};
  gd = derive_genus_degree(pair);
  EXPECT_EQ(gd.g, -1);
  EXPECT_EQ(gd.d, 2);
  EXPECT_EQ(pair.valences(), (std::vector<Int>{1, 1}));

  DecoratedGraph bare{{vertex(2)}, {}, 2, {}};
  gd = derive_genus_degree(bare);
  EXPECT_EQ(gd.g, 3);
  EXPECT_EQ(gd.d, 0);
}

TEST(DeriveGenusDegree, EdgeCountIdentity) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    auto g = generate_random_graph(seed, GraphBounds{});
    auto val = g.valences();
    EXPECT_EQ(std::accumulate(val.begin(), val.end(), Int{0}),
              g.real_edge_count() + 2 * g.conj_edge_count());
  }
}

TEST(EpsilonGamma, Examples) {
  DecoratedGraph g{{vertex(0)}, {}, 3, {1}};
  EXPECT_EQ(epsilon_gamma(g), 0);
  g.edges = {real_edge(1, 0)};
  EXPECT_EQ(epsilon_gamma(g), 0);

  DecoratedGraph h{{vertex(0)}, {real_edge(1, 0), real_edge(3, 0)}, 5, {5}};
  EXPECT_EQ(epsilon_gamma(h), 0);
  DecoratedGraph z{{vertex(0)}, {real_edge(1, 0), real_edge(1, 0)}, 4, {}};
  EXPECT_EQ(epsilon_gamma(z), 0);
  DecoratedGraph even_factor{{vertex(0)}, {real_edge(1, 0), real_edge(1, 0)}, 3, {1}};
  EXPECT_EQ(epsilon_gamma(even_factor), 0);  // 3 + (1+1)/2 = 4
  DecoratedGraph odd_factor{{vertex(0)}, {real_edge(1, 0), real_edge(1, 0)}, 3, {3}};
  EXPECT_EQ(epsilon_gamma(odd_factor), 1);  // 3 + (1+3)/2 = 5
}

TEST(EpsilonGamma, RejectsOddParitySum) {
  DecoratedGraph g{{vertex(0)}, {}, 3, {2}};
  EXPECT_THROW(epsilon_gamma(g), DomainError);
}

TEST(RealEdgeExponent, Examples) {
  EXPECT_EQ(real_edge_exponent(InvolutionKind::Tau, 4, 0, 1), 0);
  EXPECT_EQ(real_edge_exponent(InvolutionKind::Eta, 4, 0, 1), 1);
  EXPECT_EQ(real_edge_exponent(InvolutionKind::Tau, 2, 0, 3), 1);
  EXPECT_THROW(real_edge_exponent(InvolutionKind::Tau, 4, 0, 2), DomainError);
  EXPECT_THROW(real_edge_exponent(InvolutionKind::Tau, 3, 0, 1), DomainError);
}

TEST(RealEdgeExponent, NegativeSpanUsesTrueFloor) {
  // n - |a| = -2, deg 1: floor(-1/2) = -1.
  EXPECT_EQ(real_edge_exponent(InvolutionKind::Tau, 1, 3, 1), mod2(1 + floor_div(-2, 4)));
}

// floor((n-|a|) deg / 4) mod 2 is a function of deg mod 2 when 4 | n-|a| and of
// deg mod 4 when n-|a| = 2 mod 4; the whole exponent is periodic mod 4.
TEST(RealEdgeExponent, FloorTermPeriodicity) {
  for (Int span = -12; span <= 12; span += 2) {
    for (Int deg = 1; deg <= 41; deg += 2) {
      for (auto phi : {InvolutionKind::Tau, InvolutionKind::Eta}) {
        int e = real_edge_exponent(phi, span + 20, 20, deg);
        int floor_bit = e ^ static_cast<int>(mod2((deg + 1) / 2)) ^ (phi == InvolutionKind::Eta);
        Int period = parity::floor_mod(span, 4) == 0 ? 2 : 4;
        int ref = real_edge_exponent(phi, span + 20, 20, 1 + parity::floor_mod(deg - 1, period));
        int ref_floor = ref ^ static_cast<int>(mod2((1 + parity::floor_mod(deg - 1, period) + 1) / 2)) ^
                        (phi == InvolutionKind::Eta);
        EXPECT_EQ(floor_bit, ref_floor) << span << " " << deg;
        EXPECT_EQ(e, real_edge_exponent(phi, span + 20, 20, deg + 4));
      }
    }
  }
}

TEST(ConjEdgeExponent, Examples) {
  EXPECT_EQ(conj_edge_exponent(4, 0, 1), 1);
  EXPECT_EQ(conj_edge_exponent(2, 0, 2), 1);
  EXPECT_EQ(conj_edge_exponent(5, 5, 5), 1);
  EXPECT_THROW(conj_edge_exponent(3, 0, 1), DomainError);
}

TEST(VertexExponent, Examples) {
  EXPECT_EQ(vertex_exponent(vertex(0, {FlagDecoration{3, 1, false}})), 0);
  EXPECT_EQ(vertex_exponent(vertex(0, {FlagDecoration{0, 0, true}})), 1);
  EXPECT_EQ(vertex_exponent(vertex(0, {FlagDecoration{1, 0, true}, FlagDecoration{0, 0, true}})), 1);
}

TEST(Congruence, Examples) {
  DecoratedGraph genus_one{{vertex(1)}, {}, 3, {1}};
  auto r = congruence_identity_check(genus_one);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, 0);
  EXPECT_EQ(r.rhs, 0);

  DecoratedGraph one_real{{vertex(0, {FlagDecoration{}})}, {real_edge(1, 0)}, 5, {5}};
  EXPECT_TRUE(congruence_identity_check(one_real).holds);
}

TEST(Congruence, Preconditions) {
  DecoratedGraph bad_mod4{{vertex(0)}, {}, 4, {2, 2}};
  EXPECT_THROW(congruence_identity_check(bad_mod4), DomainError);
  DecoratedGraph even_real{{vertex(0)}, {real_edge(2, 0)}, 3, {1}};
  EXPECT_THROW(congruence_identity_check(even_real), DomainError);
  // n - |a| even follows from n - k even and |a| = k mod 4, so it has no
  // separate failing case.
}

TEST(Congruence, HoldsOnThousandSeedsAndMatchesOracle) {
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    auto g = generate_random_graph(seed, GraphBounds{});
    auto r = congruence_identity_check(g);
    auto [lhs, rhs] = congruence_oracle(g);
    EXPECT_TRUE(r.holds) << "seed " << seed;
    EXPECT_EQ(r.lhs, lhs) << "seed " << seed;
    EXPECT_EQ(r.rhs, rhs) << "seed " << seed;
  }
}

TEST(Congruence, HoldsUnderWiderBounds) {
  GraphBounds wide;
  wide.max_vertices = 7;
  wide.max_real_edges = 8;
  wide.max_conj_edges = 6;
  wide.max_degree = 15;
  wide.max_n = 25;
  wide.max_k = 7;
  wide.max_a = 11;
  for (std::uint64_t seed = 5000; seed < 7000; ++seed) {
    EXPECT_TRUE(congruence_identity_check(generate_random_graph(seed, wide)).holds) << seed;
  }
}

TEST(Generator, DeterministicAndValid) {
  for (std::uint64_t seed : {1ULL, 2ULL, 99ULL, 123456789ULL}) {
    auto a = generate_random_graph(seed, GraphBounds{});
    auto b = generate_random_graph(seed, GraphBounds{});
    EXPECT_EQ(a, b);
    EXPECT_NO_THROW(a.validate());
  }
  EXPECT_NE(generate_random_graph(1, GraphBounds{}), generate_random_graph(2, GraphBounds{}));
}

TEST(Generator, RespectsBounds) {
  GraphBounds b;
  b.max_vertices = 2;
  b.max_degree = 3;
  b.max_n = 6;
  b.max_k = 2;
  b.max_a = 4;
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    auto g = generate_random_graph(seed, b);
    EXPECT_LE(g.vertices.size(), 2u);
    EXPECT_LE(g.n, 6);
    EXPECT_LE(g.k(), 2);
    for (Int ai : g.a) EXPECT_LE(ai, 4);
    for (const auto& e : g.edges) EXPECT_LE(e.degree, 3);
    EXPECT_EQ(parity::floor_mod(g.abs_a() - g.k(), 4), 0);
  }
}

TEST(Generator, InfeasibleBounds) {
  GraphBounds b;
  b.max_vertices = 0;
  EXPECT_THROW(generate_random_graph(1, b), DomainError);
  GraphBounds c;
  c.max_k = 2;
  c.max_a = 0;
  EXPECT_THROW(generate_random_graph(1, c), DomainError);
}

TEST(GraphProperties, DegreeTimesGenusIsEven) {
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    auto [g, d] = derive_genus_degree(generate_random_graph(seed, GraphBounds{}));
    EXPECT_EQ(mod2(g * d), 0) << seed;
  }
}

TEST(GraphProperties, RelabelingInvariance) {
  std::mt19937_64 rng(77);
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    auto g = generate_random_graph(seed, GraphBounds{});
    std::vector<std::size_t> perm(g.vertices.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    DecoratedGraph h = g;
    for (std::size_t i = 0; i < perm.size(); ++i) h.vertices[perm[i]] = g.vertices[i];
    for (auto& e : h.edges) e.ends = {perm[e.ends[0]], perm[e.ends[1]]};
    std::shuffle(h.edges.begin(), h.edges.end(), rng);

    EXPECT_EQ(epsilon_gamma(g), epsilon_gamma(h));
    auto rg = congruence_identity_check(g);
    auto rh = congruence_identity_check(h);
    EXPECT_EQ(rg.lhs, rh.lhs);
    EXPECT_EQ(rg.rhs, rh.rhs);
    EXPECT_EQ(derive_genus_degree(g).g, derive_genus_degree(h).g);
  }
}

TEST(GraphValidation, RejectsMalformedGraphs) {
  DecoratedGraph empty{{}, {}, 1, {}};
  EXPECT_THROW(empty.validate(), DomainError);
  DecoratedGraph parity{{vertex(0)}, {}, 2, {1}};
  EXPECT_THROW(parity.validate(), DomainError);
  DecoratedGraph split_real{{vertex(0), vertex(0)}, {GraphEdge{EdgeKind::Real, 1, {0, 1}}}, 1, {}};
  EXPECT_THROW(split_real.validate(), DomainError);
  DecoratedGraph dangling{{vertex(0)}, {conj_edge(1, 0, 3)}, 1, {}};
  EXPECT_THROW(dangling.validate(), DomainError);
  DecoratedGraph theta{{GraphVertex{0, 0, {}}}, {}, 1, {}};
  EXPECT_THROW(theta.validate(), DomainError);
}

}  // namespace
}  // namespace realgw
