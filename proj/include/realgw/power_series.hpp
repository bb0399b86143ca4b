#pragma once

/**
 * @file power_series.hpp
 * @brief Truncated power series in one variable with exact coefficients.
 *
 * A series of order N knows its coefficients of t^0..t^N; everything past
 * t^N is unknown rather than zero. Binary operations therefore produce a
 * result whose order is the smaller of the two operand orders, and two
 * series compare equal when they agree through that shared order.
 */

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "realgw/errors.hpp"
#include "realgw/rational.hpp"

namespace realgw {

/// Truncation used when a caller does not supply one (genus <= 20 in the transform).
inline constexpr int kDefaultSeriesOrder = 40;

class PowerSeries {
 public:
  /// The zero series known through t^order.
  explicit PowerSeries(int order) : coeffs_(checked_size(order)) {}

  /// Takes ownership of c; the order is c.size() - 1.
  explicit PowerSeries(std::vector<Rational> c) : coeffs_(std::move(c)) {
    detail::require(!coeffs_.empty(), "series: needs at least the constant coefficient");
  }

  static PowerSeries one(int order) {
    PowerSeries s(order);
    s.coeffs_[0] = 1;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Rational& operator[](int i) const {
    detail::require(i >= 0 && i <= order(), "series: coefficient index beyond truncation order");
    return coeffs_[static_cast<std::size_t>(i)];
  }
  Rational& operator[](int i) {
    detail::require(i >= 0 && i <= order(), "series: coefficient index beyond truncation order");
    return coeffs_[static_cast<std::size_t>(i)];
  }

  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Drops everything past t^order; order must not exceed the current one.
  PowerSeries truncated(int order) const {
    detail::require(order >= 0 && order <= this->order(), "series: cannot extend truncation order");
    return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    int n = std::min(a.order(), b.order());
    for (int i = 0; i <= n; ++i) {
      if (a[i] != b[i]) return false;
    }
    return true;
  }

 private:
  static std::size_t checked_size(int order) {
    detail::require(order >= 0, "series: truncation order must be nonnegative");
    return static_cast<std::size_t>(order) + 1;
  }

  std::vector<Rational> coeffs_;
};

/// Cauchy product through min(a.order(), b.order()).
inline PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
  int n = std::min(a.order(), b.order());
  PowerSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

/// Multiplicative inverse; requires a nonzero constant term.
inline PowerSeries series_reciprocal(const PowerSeries& s) {
  detail::require(!s[0].is_zero(), "series: reciprocal needs a nonzero constant term");
  int n = s.order();
  PowerSeries out(n);
  Rational inv0 = Rational(1) / s[0];
  out[0] = inv0;
  for (int i = 1; i <= n; ++i) {
    Rational acc;
    for (int j = 1; j <= i; ++j) {
      if (!s[j].is_zero()) acc += s[j] * out[i - j];
    }
    out[i] = -acc * inv0;
  }
  return out;
}

/// s^e for any integer e. Negative powers go through the reciprocal first.
inline PowerSeries series_pow(const PowerSeries& s, std::int64_t e) {
  if (e < 0) {
    detail::require(!s[0].is_zero(), "series: negative power of a non-unit series");
    return series_pow(series_reciprocal(s), -e);
  }
  PowerSeries result = PowerSeries::one(s.order());
  PowerSeries base = s;
  while (e > 0) {
    if (e & 1) result = series_mul(result, base);
    e >>= 1;
    if (e > 0) base = series_mul(base, base);
  }
  return result;
}

namespace detail {

// Coefficients of sinh(t/2)/(t/2) or sin(t/2)/(t/2): t^{2j} carries
// (+-1)^j / (4^j (2j+1)!).
inline PowerSeries half_angle_series(int order, bool alternating) {
  PowerSeries s(order);
  Integer denom = 1;  // 4^j (2j+1)!
  for (int j = 0; 2 * j <= order; ++j) {
    if (j > 0) denom *= Integer(4) * (2 * j) * (2 * j + 1);
    Integer num = (alternating && j % 2 == 1) ? -1 : 1;
    s[2 * j] = Rational(num, denom);
  }
  return s;
}

}  // namespace detail

/// sinh(t/2)/(t/2) truncated at t^order.
inline PowerSeries series_sinh_over_halft(int order) {
  return detail::half_angle_series(order, false);
}

/// sin(t/2)/(t/2) truncated at t^order.
inline PowerSeries series_sin_over_halft(int order) {
  return detail::half_angle_series(order, true);
}

}  // namespace realgw
