#pragma once

/**
 * @file verifier.hpp
 * @brief Grid sweeps that cross-check the sign predicates against each other.
 *
 * Every check evaluates two independent routes to the same comparison: a
 * stated corollary or lemma on one side, and the composition of the lemmas
 * it is derived from on the other. A tuple where the two disagree is
 * recorded as a failure. Sweeps run in grid order, so reports are
 * deterministic.
 */

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "realgw/errors.hpp"
#include "realgw/multicover.hpp"
#include "realgw/sign_calculus.hpp"

namespace realgw {

struct IdentityReport {
  std::string identity_id;
  std::size_t grid_size = 0;
  std::vector<std::vector<Int>> failures;

  bool holds() const { return failures.empty(); }
};

/// Closed integer range [lo, hi] with a step.
struct IntRange {
  Int lo = 0;
  Int hi = 0;
  Int step = 1;

  std::vector<Int> values() const {
    std::vector<Int> out;
    for (Int x = lo; x <= hi; x += step) out.push_back(x);
    return out;
  }
};

struct VerifierGrid {
  IntRange genera{-3, 6};
  IntRange ranks{1, 4};
  IntRange degrees{-8, 8};
  IntRange deg_v{-16, 16, 2};
};

namespace detail {

inline bool flips(Comparison c) { return !c.preserves; }

template <typename Fn>
void sweep(IdentityReport& report, const std::vector<std::vector<Int>>& axes, Fn&& holds) {
  std::vector<Int> tuple(axes.size());
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == axes.size()) {
      ++report.grid_size;
      if (!holds(tuple)) report.failures.push_back(tuple);
      return;
    }
    for (Int v : axes[depth]) {
      tuple[depth] = v;
      rec(depth + 1);
    }
  };
  rec(0);
}

}  // namespace detail

/// C(a+b, 2) = C(a, 2) + C(b, 2) + ab mod 2, with binomials computed directly.
inline IdentityReport check_binomial_parity(const IntRange& range) {
  IdentityReport report{"binomial_parity", 0, {}};
  auto binom2 = [](Int x) { return x * (x - 1) / 2; };
  auto axis = range.values();
  detail::sweep(report, {axis, axis}, [&](const std::vector<Int>& t) {
    Int a = t[0], b = t[1];
    return parity::is_even(binom2(a + b) - binom2(a) - binom2(b) - a * b);
  });
  return report;
}

/// Canonical union lemma vs three applications of the canonical/projection
/// comparison: the union over genus g1+g2-1 with degree d1+d2, and each piece.
inline IdentityReport check_union_canonical_vs_cvc(const VerifierGrid& grid) {
  IdentityReport report{"union_canonical_vs_cvc", 0, {}};
  auto gs = grid.genera.values();
  auto ds = grid.degrees.values();
  detail::sweep(report, {gs, gs, grid.ranks.values(), ds, ds}, [](const std::vector<Int>& t) {
    Int g1 = t[0], g2 = t[1], k = t[2], d1 = t[3], d2 = t[4];
    bool lemma = detail::flips(union_lemma(g1, g2, k, d1, d2, LemmaVariant::Canonical));
    bool composed = detail::flips(cvc_parity(g1 + g2 - 1, k, d1 + d2)) ^
                    detail::flips(cvc_parity(g1, k, d1)) ^ detail::flips(cvc_parity(g2, k, d2));
    return lemma == composed;
  });
  return report;
}

/// Projection doublet lemma (rank 1, both halves of degree d) vs the
/// canonical/projection comparison on the whole doublet of genus 2g-1.
inline IdentityReport check_doublet_vs_cvc(const VerifierGrid& grid) {
  IdentityReport report{"doublet_vs_cvc", 0, {}};
  detail::sweep(report, {grid.genera.values(), grid.degrees.values()},
                [](const std::vector<Int>& t) {
                  Int g = t[0], d = t[1];
                  bool lemma = detail::flips(doublet_lemma(g, 1, d, LemmaVariant::Projection));
                  bool whole = detail::flips(cvc_parity(2 * g - 1, 1, 2 * d));
                  return lemma == whole;
                });
  return report;
}

/// Relative spin vs E2 equals relative spin vs E3 composed with the
/// canonical/projection comparison for L* (degree -deg V / 2 on P^1).
inline IdentityReport check_relspin_mod8(const IntRange& deg_v) {
  detail::require(deg_v.step % 2 == 0 && parity::is_even(deg_v.lo),
                  "verify: deg V grid must contain even values only");
  IdentityReport report{"relspin_mod8", 0, {}};
  detail::sweep(report, {deg_v.values()}, [](const std::vector<Int>& t) {
    Int dv = t[0];
    bool e2 = detail::flips(relspin_comparison(dv, RelSpinVariant::RelSpinVsE2));
    bool e3 = detail::flips(relspin_comparison(dv, RelSpinVariant::RelSpinVsE3));
    bool cvc = detail::flips(cvc_parity(0, 1, -dv / 2));
    return e2 == (e3 ^ cvc);
  });
  return report;
}

/// Both union corollaries vs the union lemma for L* (rank 1, degrees -d1, -d2)
/// composed with the canonical union lemma for the trivial bundle.
inline IdentityReport check_union_crl_vs_lemma(const VerifierGrid& grid) {
  IdentityReport report{"union_crl_vs_lemma", 0, {}};
  auto gs = grid.genera.values();
  auto ds = grid.degrees.values();
  detail::sweep(report, {gs, gs, ds, ds}, [](const std::vector<Int>& t) {
    Int g1 = t[0], g2 = t[1], d1 = t[2], d2 = t[3];
    CorollaryParams p;
    p.g1 = g1;
    p.g2 = g2;
    p.d1 = d1;
    p.d2 = d2;
    bool trivial = detail::flips(union_lemma(g1, g2, 1, 0, 0, LemmaVariant::Canonical));
    bool via_projection =
        detail::flips(union_lemma(g1, g2, 1, -d1, -d2, LemmaVariant::Projection)) ^ trivial;
    bool via_canonical =
        detail::flips(union_lemma(g1, g2, 1, -d1, -d2, LemmaVariant::Canonical)) ^ trivial;
    return detail::flips(induced_corollary(CorollaryId::Union, p, CorollaryVariant::ViaProjection)) ==
               via_projection &&
           detail::flips(induced_corollary(CorollaryId::Union, p, CorollaryVariant::ViaCanonical)) ==
               via_canonical;
  });
  return report;
}

/// E-node corollaries vs the E-node lemma for L* composed with the
/// canonical E-node lemma for the trivial bundle.
inline IdentityReport check_enode_crl_vs_lemma(const VerifierGrid& grid) {
  IdentityReport report{"enode_crl_vs_lemma", 0, {}};
  detail::sweep(report, {grid.genera.values(), grid.degrees.values()},
                [](const std::vector<Int>& t) {
                  Int g = t[0], d = t[1];
                  CorollaryParams p;
                  p.g = g;
                  p.d = d;
                  bool trivial = detail::flips(e_node_lemma(g, 1, 0, LemmaVariant::Canonical));
                  bool via_projection =
                      detail::flips(e_node_lemma(g, 1, -d, LemmaVariant::Projection)) ^ trivial;
                  bool via_canonical =
                      detail::flips(e_node_lemma(g, 1, -d, LemmaVariant::Canonical)) ^ trivial;
                  return detail::flips(induced_corollary(CorollaryId::ENode, p,
                                                         CorollaryVariant::ViaProjection)) ==
                             via_projection &&
                         detail::flips(induced_corollary(CorollaryId::ENode, p,
                                                         CorollaryVariant::ViaCanonical)) ==
                             via_canonical;
                });
  return report;
}

/// Sin-convention coefficients equal (-1)^g times the sinh ones for
/// h in [0, 6], c1B in {-4, -2, 0, 2, 4, 8}, 2g <= order.
inline IdentityReport check_sin_vs_sinh(int order) {
  detail::require(order >= 0, "verify: order must be nonnegative");
  IdentityReport report{"sin_vs_sinh", 0, {}};
  const std::vector<Int> c1bs{-4, -2, 0, 2, 4, 8};
  for (Int c1b : c1bs) {
    for (Int h = 0; h <= 6; ++h) {
      PowerSeries sinh_pow = series_pow(series_sinh_over_halft(order), multicover_exponent(h, c1b));
      PowerSeries sin_pow = series_pow(series_sin_over_halft(order), multicover_exponent(h, c1b));
      for (int g = 0; 2 * g <= order; ++g) {
        ++report.grid_size;
        Rational expected = g % 2 == 0 ? sinh_pow[2 * g] : -sinh_pow[2 * g];
        if (sin_pow[2 * g] != expected) report.failures.push_back({h, c1b, g});
      }
    }
  }
  return report;
}

/// Identity ids in the order `verify --all` runs them.
inline const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids{
      "binomial_parity",    "union_canonical_vs_cvc", "doublet_vs_cvc", "relspin_mod8",
      "union_crl_vs_lemma", "enode_crl_vs_lemma",     "sin_vs_sinh"};
  return ids;
}

/// Runs one identity on its default grid.
inline IdentityReport run_identity(const std::string& id, int series_order = kDefaultSeriesOrder) {
  VerifierGrid grid;
  if (id == "binomial_parity") return check_binomial_parity(grid.degrees);
  if (id == "union_canonical_vs_cvc") return check_union_canonical_vs_cvc(grid);
  if (id == "doublet_vs_cvc") return check_doublet_vs_cvc(grid);
  if (id == "relspin_mod8") return check_relspin_mod8(grid.deg_v);
  if (id == "union_crl_vs_lemma") return check_union_crl_vs_lemma(grid);
  if (id == "enode_crl_vs_lemma") return check_enode_crl_vs_lemma(grid);
  if (id == "sin_vs_sinh") return check_sin_vs_sinh(series_order);
  throw DomainError("verify: unknown identity '" + id + "'");
}

}  // namespace realgw
