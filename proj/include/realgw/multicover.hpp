#pragma once

/**
 * @file multicover.hpp
 * @brief Multiple-cover transform between real GW invariants and curve counts.
 *
 * For a class B with even pairing c1B = <c1(X), B>, the coefficient
 * C_h(g) is the t^{2g} coefficient of
 *
 *     ( f(t/2) / (t/2) )^(h - 1 + c1B/2),     f = sinh or sin,
 *
 * and the genus-g invariant is GW_g = sum over h <= g, g - h even, of
 * C_h((g - h)/2) * E_h. Since C_h(0) = 1 the relation is unitriangular and
 * splits into independent even- and odd-genus towers.
 */

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "realgw/errors.hpp"
#include "realgw/power_series.hpp"
#include "realgw/rational.hpp"

namespace realgw {

/// Sinh applies when the orienting line bundle admits a conjugation lift;
/// Sin otherwise.
enum class TransformConvention { Sinh, Sin };

inline std::string_view to_string(TransformConvention c) {
  return c == TransformConvention::Sinh ? "sinh" : "sin";
}

inline TransformConvention parse_convention(std::string_view s) {
  if (s == "sinh") return TransformConvention::Sinh;
  if (s == "sin") return TransformConvention::Sin;
  throw DomainError("convention must be \"sinh\" or \"sin\", got \"" + std::string(s) + "\"");
}

/// Genus-indexed values for one class B. Genera in [0, max_genus] that are
/// missing from `entries` read as zero; nothing above max_genus exists.
struct InvariantVector {
  std::map<int, Rational> entries;
  std::int64_t c1B = 0;
  int max_genus = 0;

  void validate() const {
    detail::require(max_genus >= 0, "invariant vector: max_genus must be nonnegative");
    detail::require(c1B % 2 == 0, "invariant vector: c1B must be even");
    for (const auto& [h, v] : entries) {
      detail::require(h >= 0 && h <= max_genus,
                      "invariant vector: genus " + std::to_string(h) + " outside [0, max_genus]");
    }
  }

  Rational at(int genus) const {
    auto it = entries.find(genus);
    return it == entries.end() ? Rational() : it->second;
  }

  friend bool operator==(const InvariantVector& a, const InvariantVector& b) {
    if (a.c1B != b.c1B || a.max_genus != b.max_genus) return false;
    for (int g = 0; g <= a.max_genus; ++g) {
      if (a.at(g) != b.at(g)) return false;
    }
    return true;
  }
};

inline PowerSeries base_series(TransformConvention conv, int order) {
  return conv == TransformConvention::Sinh ? series_sinh_over_halft(order)
                                           : series_sin_over_halft(order);
}

inline std::int64_t multicover_exponent(std::int64_t h, std::int64_t c1B) {
  detail::require(c1B % 2 == 0, "multicover: c1B must be even");
  return h - 1 + c1B / 2;
}

/// C_h(g) for the given convention.
inline Rational multicover_coefficient(std::int64_t h, std::int64_t c1B, int g,
                                       TransformConvention conv) {
  detail::require(h >= 0, "multicover: h must be nonnegative");
  detail::require(g >= 0, "multicover: g must be nonnegative");
  PowerSeries s = series_pow(base_series(conv, 2 * g), multicover_exponent(h, c1B));
  return s[2 * g];
}

/// Coefficients C_h(j) for every h <= G and 2j <= G - h, computed once per h.
class CoefficientTable {
 public:
  CoefficientTable(std::int64_t c1B, int max_genus, TransformConvention conv) {
    detail::require(max_genus >= 0, "multicover: max_genus must be nonnegative");
    PowerSeries base = base_series(conv, max_genus);
    rows_.reserve(static_cast<std::size_t>(max_genus) + 1);
    for (int h = 0; h <= max_genus; ++h) {
      rows_.push_back(series_pow(base.truncated(max_genus - h), multicover_exponent(h, c1B)));
    }
  }

  /// Coefficient linking E_h to GW_g; requires g - h even and nonnegative.
  const Rational& link(int h, int g) const { return rows_[static_cast<std::size_t>(h)][g - h]; }

 private:
  std::vector<PowerSeries> rows_;
};

inline InvariantVector forward_transform(const InvariantVector& e, TransformConvention conv) {
  e.validate();
  const int top = e.max_genus;
  CoefficientTable table(e.c1B, top, conv);
  InvariantVector gw{{}, e.c1B, top};
  for (int g = 0; g <= top; ++g) {
    Rational sum;
    for (int h = g % 2; h <= g; h += 2) {
      Rational eh = e.at(h);
      if (!eh.is_zero()) sum += table.link(h, g) * eh;
    }
    gw.entries.emplace(g, std::move(sum));
  }
  return gw;
}

/// The unique E with forward_transform(E) = gw on genera <= max_genus.
inline InvariantVector invert_transform(const InvariantVector& gw, TransformConvention conv) {
  gw.validate();
  const int top = gw.max_genus;
  CoefficientTable table(gw.c1B, top, conv);
  InvariantVector e{{}, gw.c1B, top};
  // Increasing g within each parity tower; the diagonal coefficient is 1.
  for (int g = 0; g <= top; ++g) {
    Rational value = gw.at(g);
    for (int h = g % 2; h < g; h += 2) {
      const Rational& eh = e.entries.at(h);
      if (!eh.is_zero()) value -= table.link(h, g) * eh;
    }
    e.entries.emplace(g, std::move(value));
  }
  return e;
}

/// Entries whose value is not an integer, in increasing genus.
inline std::vector<std::pair<int, Rational>> integrality_check(const InvariantVector& e) {
  std::vector<std::pair<int, Rational>> violations;
  for (const auto& [h, v] : e.entries) {
    if (!v.is_integer()) violations.emplace_back(h, v);
  }
  return violations;
}

}  // namespace realgw
