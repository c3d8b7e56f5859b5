#include "limitlab/metric.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <cstdio>

#include "limitlab/errors.hpp"

namespace limitlab {

bool Distance::below(const Rational& eps) const {
  if (exact) return *exact < eps;
  return hi < eps.to_long_double();
}

std::string Distance::to_string() const {
  if (exact) return exact->to_string();
  char buf[96];
  if (lo == hi) {
    std::snprintf(buf, sizeof buf, "%.12Lg", lo);
  } else {
    std::snprintf(buf, sizeof buf, "[%.12Lg,%.12Lg]", lo, hi);
  }
  return buf;
}

bool Metric::in_domain(const Language&, const Language&) const { return true; }

namespace {

class ExactMetric final : public Metric {
 public:
  std::string name() const override { return "exact"; }
  std::optional<Rational> gap() const override { return Rational(1); }
  Distance distance(const Language& a, const Language& b) const override {
    return Distance::of(Rational(equals(a, b) ? 0 : 1));
  }
};

class CountingMetric final : public Metric {
 public:
  explicit CountingMetric(Language hub) : hub_(std::move(hub)) {
    if (hub_.is_finite()) throw PreconditionError("counting metric needs an infinite hub language");
  }

  std::string name() const override { return "counting"; }
  std::string describe() const override { return "counting(L_inf=" + hub_.describe() + ")"; }

  bool in_domain(const Language& a, const Language& b) const override {
    return admissible(a) && admissible(b);
  }

  Distance distance(const Language& a, const Language& b) const override {
    for (const Language* l : {&a, &b}) {
      if (!admissible(*l)) {
        throw DomainError("counting metric is defined on finite languages and " + hub_.describe() +
                          " only; got " + l->describe());
      }
    }
    if (equals(a, b)) return Distance::of(Rational(0));
    if (!a.is_finite()) return Distance::of(to_hub(b));
    if (!b.is_finite()) return Distance::of(to_hub(a));
    return Distance::of(to_hub(a) + to_hub(b));
  }

 private:
  bool admissible(const Language& l) const { return l.is_finite() || equals(l, hub_); }

  Rational to_hub(const Language& finite) const {
    const Cardinality c = intersection_cardinality(finite, hub_);
    if (c.count == 0) return Rational(1);
    return Rational(1, static_cast<std::int64_t>(c.count));
  }

  Language hub_;
};

class SymdiffMetric final : public Metric {
 public:
  explicit SymdiffMetric(double base) : base_(base), log_base_(std::log(static_cast<long double>(base))) {
    if (!(base > 1)) throw PreconditionError("symdiff metric needs base > 1");
  }

  std::string name() const override { return "symdiff"; }
  std::string describe() const override {
    char buf[64];
    std::snprintf(buf, sizeof buf, "symdiff(base=%.12g)", base_);
    return buf;
  }

  Distance distance(const Language& a, const Language& b) const override {
    if (!(a.alphabet() == b.alphabet())) throw DomainError("symdiff distance across alphabets");
    const Alphabet& alphabet = a.alphabet();
    if (a.kind() == LanguageKind::Finite && b.kind() == LanguageKind::Finite) {
      std::vector<Word> diff;
      std::set_symmetric_difference(a.words().begin(), a.words().end(), b.words().begin(), b.words().end(),
                                    std::back_inserter(diff), ShortlexLess{&alphabet});
      long double sum = 0;
      for (const auto& w : diff) sum += weight(alphabet.universe_rank(w));
      return Distance::point(sum);
    }
    Dfa diff = product(to_dfa(a), to_dfa(b), [](bool x, bool y) { return x != y; });
    const Cardinality card = dfa_cardinality(diff);
    ShortlexEnumerator words(alphabet, std::move(diff));
    long double sum = 0;
    for (std::size_t produced = 0;; ++produced) {
      auto w = words.next();
      if (!w) return Distance::point(sum);
      const long double rank = alphabet.universe_rank(*w);
      sum += weight(rank);
      if (!card.infinite) continue;
      // Every later difference has a larger rank.
      const long double tail = weight(rank) / (static_cast<long double>(base_) - 1);
      if (tail <= kRelativeTail * sum || tail == 0 || produced >= kMaxWords) {
        return Distance::bounds(sum, sum + tail);
      }
    }
  }

 private:
  static constexpr long double kRelativeTail = 1e-12L;
  static constexpr std::size_t kMaxWords = 1'000'000;

  long double weight(long double rank) const { return std::exp(-rank * log_base_); }

  double base_;
  long double log_base_;
};

bool distance_nonnegative(const Distance& d) { return d.exact ? *d.exact >= Rational(0) : d.lo >= 0; }

}  // namespace

MetricPtr exact_metric() { return std::make_shared<ExactMetric>(); }
MetricPtr counting_metric(const Language& hub) { return std::make_shared<CountingMetric>(hub); }
MetricPtr symdiff_metric(double base) { return std::make_shared<SymdiffMetric>(base); }

AxiomReport verify_metric_axioms(const Metric& metric, std::span<const Language> sample, double tolerance) {
  AxiomReport report;
  const std::size_t n = sample.size();
  std::vector<std::vector<std::optional<Distance>>> d(n, std::vector<std::optional<Distance>>(n));
  std::vector<std::vector<char>> same(n, std::vector<char>(n, 0));
  auto violate = [&](std::string axiom, std::vector<std::size_t> idx, std::string detail) {
    report.violations.push_back({std::move(axiom), std::move(idx), std::move(detail)});
  };
  const long double tol = tolerance;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      same[i][j] = equals(sample[i], sample[j]) ? 1 : 0;
      try {
        d[i][j] = metric.distance(sample[i], sample[j]);
      } catch (const DomainError& e) {
        report.domain_errors.push_back("(" + std::to_string(i) + "," + std::to_string(j) + "): " + e.what());
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!d[i][j]) continue;
      ++report.pairs_checked;
      const Distance& x = *d[i][j];
      const std::string shown = "d=" + x.to_string();
      if (!distance_nonnegative(x)) violate("non-negativity", {i, j}, shown);
      if (same[i][j]) {
        const bool zero = x.exact ? *x.exact == Rational(0) : x.hi == 0;
        if (!zero) violate("identity", {i, j}, "equal languages at " + shown);
      } else {
        const bool positive = x.exact ? *x.exact > Rational(0) : x.lo > 0;
        if (!positive) violate("identity", {i, j}, "distinct languages at " + shown);
        if (const auto g = metric.gap()) {
          const bool ok = x.exact ? *x.exact >= *g : x.lo >= g->to_long_double() - tol;
          if (!ok) violate("gap", {i, j}, shown + " below gap " + g->to_string());
        }
      }
      if (d[j][i]) {
        const Distance& y = *d[j][i];
        const bool ok = (x.exact && y.exact) ? *x.exact == *y.exact : (x.lo <= y.hi + tol && y.lo <= x.hi + tol);
        if (!ok) violate("symmetry", {i, j}, shown + " vs d=" + y.to_string());
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!d[i][k] || !d[i][j] || !d[j][k]) continue;
        ++report.triples_checked;
        const Distance& direct = *d[i][k];
        const Distance& left = *d[i][j];
        const Distance& right = *d[j][k];
        bool ok;
        if (direct.exact && left.exact && right.exact) {
          ok = *direct.exact <= *left.exact + *right.exact;
        } else {
          ok = direct.lo <= left.hi + right.hi + tol;
        }
        if (!ok) {
          violate("triangle", {i, j, k},
                  "d(i,k)=" + direct.to_string() + " > d(i,j)+d(j,k)=" + left.to_string() + "+" + right.to_string());
        }
      }
    }
  }
  report.pass = report.violations.empty() && report.domain_errors.empty();
  return report;
}

}  // namespace limitlab
