#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "limitlab/language.hpp"
#include "limitlab/rational.hpp"

namespace limitlab {

/// A distance value: exact rational when known, otherwise a certified
/// interval [lo, hi] (lo == hi for directly summed values).
struct Distance {
  long double lo = 0;
  long double hi = 0;
  std::optional<Rational> exact;

  static Distance of(const Rational& r) { return {r.to_long_double(), r.to_long_double(), r}; }
  static Distance point(long double v) { return {v, v, std::nullopt}; }
  static Distance bounds(long double lo, long double hi) { return {lo, hi, std::nullopt}; }

  /// Strict d < eps. Exact distances compare exactly; intervals compare by
  /// their upper bound.
  bool below(const Rational& eps) const;

  /// "p/q" for exact values, otherwise "[lo,hi]" with 12 significant digits.
  std::string to_string() const;
};

/// Distance function on a declared domain of languages.
class Metric {
 public:
  virtual ~Metric() = default;

  virtual std::string name() const = 0;
  /// Config-style description including parameters.
  virtual std::string describe() const { return name(); }
  /// inf{d(L,G) : L != G} when known to be positive (exact metrics).
  virtual std::optional<Rational> gap() const { return std::nullopt; }
  virtual bool in_domain(const Language& a, const Language& b) const;
  /// Throws DomainError for pairs outside the domain.
  virtual Distance distance(const Language& a, const Language& b) const = 0;
};

using MetricPtr = std::shared_ptr<const Metric>;

/// Zero-one metric: 0 on equal languages, 1 otherwise. Gap 1.
MetricPtr exact_metric();

/// Counting metric around an infinite hub language L_inf, defined on
/// pairs drawn from the finite languages plus L_inf itself:
///   d(L, L_inf) = 1                      if L finite and L ∩ L_inf = ∅
///   d(L, L_inf) = 1 / |L ∩ L_inf|        if L finite otherwise
///   d(L, G)     = d(L, L_inf) + d(G, L_inf)  for distinct finite L, G
///   d(L, L)     = 0
MetricPtr counting_metric(const Language& hub);

/// Weighted symmetric difference: sum over w in L Δ G of base^-rank(w),
/// rank being the shortlex position of w among all words. Infinite
/// differences are truncated once the certified tail is below 1e-12 of the
/// accumulated sum.
MetricPtr symdiff_metric(double base);

struct AxiomViolation {
  std::string axiom;
  std::vector<std::size_t> indices;  // positions in the sample
  std::string detail;
};

struct AxiomReport {
  bool pass = true;
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;
  std::vector<AxiomViolation> violations;
  std::vector<std::string> domain_errors;
};

/// Non-negativity, identity of indiscernibles (against `equals`), symmetry,
/// the triangle inequality and, when the metric declares one, the gap
/// property, over all pairs and ordered triples of `sample`. Exact
/// distances are compared exactly; interval distances with `tolerance`.
/// Pairs outside the metric's domain are listed in `domain_errors`.
AxiomReport verify_metric_axioms(const Metric& metric, std::span<const Language> sample, double tolerance);

}  // namespace limitlab
