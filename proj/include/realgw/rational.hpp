#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers over arbitrary-precision integers.
 *
 * Values are always stored reduced: the denominator is positive and
 * coprime to the numerator, and zero is uniquely 0/1. The text form is
 * "p/q", or just "p" when q = 1.
 */

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/integer.hpp>

#include "realgw/errors.hpp"

namespace realgw {

using Integer = boost::multiprecision::cpp_int;

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by intent
  Rational(Integer n) : num_(std::move(n)), den_(1) {}  // NOLINT
  Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
    detail::require(den_ != 0, "rational: zero denominator");
    normalize();
  }

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  /// Largest integer not exceeding the value.
  Integer floor() const {
    Integer q = num_ / den_;  // truncates toward zero
    if (num_.sign() < 0 && q * den_ != num_) q -= 1;
    return q;
  }

  /// The value as an integer; throws unless is_integer().
  Integer to_integer() const {
    detail::require(is_integer(), "rational: value " + to_string() + " is not an integer");
    return num_;
  }

  std::string to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  /// Parses "p", "p/q", with an optional leading sign on p.
  static Rational parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
      detail::require(!s.empty(), "rational: malformed literal '" + std::string(text) + "'");
      std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      detail::require(i < s.size(), "rational: malformed literal '" + std::string(text) + "'");
      for (std::size_t j = i; j < s.size(); ++j) {
        detail::require(s[j] >= '0' && s[j] <= '9',
                        "rational: malformed literal '" + std::string(text) + "'");
      }
      Integer v(std::string(s.substr(i)));
      return s[0] == '-' ? Integer(-v) : v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    detail::require(!o.is_zero(), "rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  // Reduced form is canonical, so equality is componentwise.
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    Integer lhs = a.num_ * b.den_;
    Integer rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  void normalize() {
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Integer g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Integer num_;
  Integer den_;
};

enum class ArithOp { Add, Sub, Mul, Div };

/// One arithmetic step; a zero divisor yields std::nullopt instead of throwing.
inline std::optional<Rational> rational_arith(const Rational& a, const Rational& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div:
      if (b.is_zero()) return std::nullopt;
      return a / b;
  }
  return std::nullopt;
}

}  // namespace realgw
