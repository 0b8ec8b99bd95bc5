#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace causerep {

// Exact nonnegative rational. Responsibilities only ever take the values
// 0 and 1/k, but the type keeps a full num/den pair so equality and
// ordering stay exact.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  constexpr void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  static constexpr Rational zero() { return Rational(); }
  static constexpr Rational reciprocal_of(std::int64_t k) { return Rational(1, k); }

  constexpr bool is_zero() const { return num == 0; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  friend constexpr bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Cross-multiplication; operands here are tiny so overflow is not a concern.
    return a.num * b.den <=> b.num * a.den;
  }
};

}  // namespace causerep
