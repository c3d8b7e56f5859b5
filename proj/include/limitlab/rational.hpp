#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>

namespace limitlab {

/// Exact non-overflowing-at-desk-scale rational number p/q with q > 0 kept
/// in lowest terms. Used wherever a distance is known exactly.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  long double to_long_double() const noexcept;
  double to_double() const noexcept { return static_cast<double>(to_long_double()); }

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  /// Parses "p/q" or an integer or a decimal literal.
  static Rational parse(std::string_view text);

  /// Closest rational with a small denominator (continued fractions). Values
  /// such as 0.1 or 1e-9 come back as exactly 1/10 and 1/1000000000.
  static Rational approximate(double value);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace limitlab
