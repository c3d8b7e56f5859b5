#include "limitlab/chain.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "limitlab/errors.hpp"
#include "limitlab/simulate.hpp"
#include "limitlab/text.hpp"

namespace limitlab {

std::string to_string(ChainKind kind) {
  switch (kind) {
    case ChainKind::EnumerationPrefix: return "enumeration";
    case ChainKind::Decomposition: return "decomposition";
    case ChainKind::Custom: return "custom";
  }
  return "?";
}

std::string to_string(ConvergenceVerdict verdict) {
  return verdict == ConvergenceVerdict::Converging ? "CONVERGING" : "OBSTRUCTED";
}

LanguageChain::LanguageChain(ChainKind kind, Language limit, Generator generator, std::size_t strictness_bound,
                             std::size_t growth_horizon, std::function<std::size_t(std::size_t)> cover_bound,
                             std::size_t coverage_max_len)
    : kind_(kind),
      limit_(std::move(limit)),
      generator_(std::move(generator)),
      strictness_bound_(strictness_bound),
      growth_horizon_(growth_horizon),
      cover_bound_(std::move(cover_bound)),
      coverage_max_len_(coverage_max_len) {}

Language LanguageChain::at(std::size_t n) const {
  if (n == 0) throw PreconditionError("chain indices start at 1");
  return generator_(n);
}

LanguageChain chain_from_enumeration(const Language& limit) {
  if (limit.is_finite()) throw DomainError("an enumeration chain needs an infinite limit, got " + limit.describe());
  CanonicalWords words(limit);
  auto gen = [words](std::size_t n) {
    std::vector<Word> prefix;
    prefix.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) prefix.push_back(*words.get(i));
    return Language::finite(words.language().alphabet(), std::move(prefix));
  };
  return LanguageChain(ChainKind::EnumerationPrefix, limit, std::move(gen), 1, SIZE_MAX,
                       [](std::size_t i) { return i; }, 8);
}

LanguageChain chain_from_decomposition(std::vector<Language> parts, const Language& limit,
                                       std::size_t coverage_max_len) {
  if (parts.empty()) throw PreconditionError("a decomposition needs at least one part");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!is_subset(parts[i], limit)) {
      throw PreconditionError("part " + std::to_string(i + 1) + " " + parts[i].describe() + " is not contained in " +
                              limit.describe());
    }
  }
  // Cumulative unions; the last one repeats past the end of the list.
  std::vector<Language> unions;
  Dfa acc = to_dfa(parts.front());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) acc = minimize(product(acc, to_dfa(parts[i]), [](bool x, bool y) { return x || y; }));
    Language u = Language::regular(limit.alphabet(), acc, "union of parts 1.." + std::to_string(i + 1));
    if (u.is_finite()) u = Language::finite(limit.alphabet(), enumerate(u, u.cardinality().count, SIZE_MAX));
    unions.push_back(std::move(u));
  }
  for (const auto& w : enumerate(limit, SIZE_MAX, coverage_max_len)) {
    if (!unions.back().contains(w)) {
      throw ValidationError("decomposition misses limit word '" + w + "' (checked to length " +
                            std::to_string(coverage_max_len) + ")");
    }
  }
  const std::size_t count = unions.size();
  auto gen = [unions](std::size_t n) { return unions[std::min(n, unions.size()) - 1]; };
  // Only the growth steps the parts actually provide are promised.
  std::size_t growth = 1;
  for (std::size_t i = 1; i < count; ++i) {
    if (!equals(unions[i], unions[i - 1])) growth = i + 1;
  }
  return LanguageChain(ChainKind::Decomposition, limit, std::move(gen), count, growth,
                       [count](std::size_t) { return count; }, coverage_max_len);
}

ChainValidation validate_chain(const LanguageChain& chain, std::size_t n_max) {
  ChainValidation v;
  auto problem = [&](std::string p) {
    v.ok = false;
    v.problems.push_back(std::move(p));
  };
  // Members are large for long chains; keep only a sliding window.
  std::map<std::size_t, Language> window;
  auto member = [&](std::size_t n) -> const Language& {
    auto it = window.find(n);
    if (it == window.end()) it = window.emplace(n, chain.at(n)).first;
    return it->second;
  };
  // Coverage targets: the i-th limit word must be in L_cover_bound(i).
  std::multimap<std::size_t, std::pair<std::size_t, Word>> coverage;
  std::size_t i = 0;
  for (auto& w : enumerate(chain.limit(), n_max, chain.coverage_max_len())) {
    ++i;
    coverage.emplace(chain.cover_bound(i), std::pair{i, std::move(w)});
  }
  const std::size_t growth = std::min(n_max, chain.growth_horizon());
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Language& current = member(n);
    if (n > 1 && !is_subset(member(n - 1), current)) problem("not increasing at n=" + std::to_string(n - 1));
    if (n < growth || (n == growth && growth < chain.growth_horizon())) {
      bool grows = false;
      const std::size_t last = std::min(n + chain.strictness_bound(), chain.growth_horizon());
      for (std::size_t m = n + 1; m <= last && !grows; ++m) grows = is_proper_subset(current, member(m));
      if (!grows) {
        problem("no strict growth within " + std::to_string(chain.strictness_bound()) + " of n=" + std::to_string(n));
      }
    }
    auto [lo, hi] = coverage.equal_range(n);
    for (auto it = lo; it != hi; ++it) {
      if (!current.contains(it->second.second)) {
        problem("limit word '" + it->second.second + "' (#" + std::to_string(it->second.first) + ") missing from L_" +
                std::to_string(n));
      }
    }
    window.erase(window.begin(), window.lower_bound(n));
  }
  return v;
}

std::vector<Rational> default_epsilon_ladder() {
  return {Rational(1, 2), Rational(1, 4), Rational(1, 8), Rational(1, 16), Rational(1, 32), Rational(1, 64)};
}

std::string ConvergenceResult::verdict_line() const {
  std::string out = "VERDICT " + to_string(verdict) + " (within n_max=" + std::to_string(rows.size()) + ")";
  for (std::size_t r = 0; r < ladder.size(); ++r) {
    out += " eps=" + ladder[r].to_string() + ":";
    out += entered_at[r] ? "n>=" + std::to_string(*entered_at[r]) : std::string("never");
  }
  return out;
}

ConvergenceResult convergence_experiment(const LanguageChain& chain, const Metric& metric, std::size_t n_max,
                                         std::vector<Rational> ladder) {
  if (n_max == 0) throw PreconditionError("n_max must be positive");
  ConvergenceResult result;
  result.ladder = std::move(ladder);
  result.rows.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    ChainRow row{n, std::nullopt, ""};
    try {
      row.distance = metric.distance(chain.at(n), chain.limit());
    } catch (const DomainError&) {
      row.flag = "domain_error";
    }
    result.rows.push_back(std::move(row));
  }
  for (const auto& eps : result.ladder) {
    std::optional<std::size_t> from;
    for (auto it = result.rows.rbegin(); it != result.rows.rend(); ++it) {
      if (!it->distance || !it->distance->below(eps)) break;
      from = it->n;
    }
    result.entered_at.push_back(from);
    if (!from) result.verdict = ConvergenceVerdict::Obstructed;
  }
  return result;
}

std::string chain_csv(const ConvergenceResult& result, const std::vector<std::string>& metadata) {
  std::ostringstream out;
  for (const auto& line : metadata) out << "# " << line << '\n';
  out << kChainCsvHeader << '\n';
  for (const auto& row : result.rows) {
    out << row.n << ',';
    if (row.distance) {
      out << format_real(row.distance->lo) << ',' << format_real(row.distance->hi);
    } else {
      out << ',';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace limitlab
