#include "limitlab/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "limitlab/errors.hpp"

namespace limitlab {

namespace {

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw DomainError("rational overflow");
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / (g == 0 ? 1 : g);
  den_ = den / (g == 0 ? 1 : g);
}

long double Rational::to_long_double() const noexcept {
  return static_cast<long double>(num_) / static_cast<long double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw PreconditionError("empty rational literal");
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    char* end = nullptr;
    const long long p = std::strtoll(s.c_str(), &end, 10);
    if (end != s.c_str() + slash) throw PreconditionError("bad rational literal: " + s);
    const char* q_begin = s.c_str() + slash + 1;
    const long long q = std::strtoll(q_begin, &end, 10);
    if (end == q_begin || *end != '\0') throw PreconditionError("bad rational literal: " + s);
    return Rational(p, q);
  }
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw PreconditionError("bad rational literal: " + s);
  return approximate(v);
}

Rational Rational::approximate(double value) {
  if (!std::isfinite(value)) throw PreconditionError("non-finite value");
  constexpr long double kMaxDen = 1e15L;
  const long double x = value;
  const long double tol = 1e-15L * std::max<long double>(1.0L, std::fabs(x));
  // Convergents h/k of the continued fraction expansion.
  long double h_prev = 1, h = std::floor(x);
  long double k_prev = 0, k = 1;
  long double frac = x - std::floor(x);
  while (std::fabs(x - h / k) > tol && frac > 0) {
    const long double inv = 1.0L / frac;
    const long double a = std::floor(inv);
    frac = inv - a;
    const long double h_next = a * h + h_prev;
    const long double k_next = a * k + k_prev;
    if (k_next > kMaxDen) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return Rational(static_cast<std::int64_t>(h), static_cast<std::int64_t>(k));
}

Rational operator+(const Rational& a, const Rational& b) {
  const __int128 num = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
  const __int128 den = static_cast<__int128>(a.den_) * b.den_;
  // Reduce in 128 bits before narrowing.
  __int128 x = num < 0 ? -num : num, y = den;
  while (y != 0) {
    const __int128 t = x % y;
    x = y;
    y = t;
  }
  const __int128 g = x == 0 ? 1 : x;
  return Rational(narrow(num / g), narrow(den / g));
}

Rational operator*(const Rational& a, const Rational& b) {
  const std::int64_t g1 = std::gcd(a.num_, b.den_);
  const std::int64_t g2 = std::gcd(b.num_, a.den_);
  const __int128 num = static_cast<__int128>(a.num_ / (g1 ? g1 : 1)) * (b.num_ / (g2 ? g2 : 1));
  const __int128 den = static_cast<__int128>(a.den_ / (g2 ? g2 : 1)) * (b.den_ / (g1 ? g1 : 1));
  return Rational(narrow(num), narrow(den));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace limitlab
