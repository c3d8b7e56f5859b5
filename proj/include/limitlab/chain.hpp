#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "limitlab/metric.hpp"
#include "limitlab/rational.hpp"

namespace limitlab {

enum class ChainKind { EnumerationPrefix, Decomposition, Custom };

std::string to_string(ChainKind kind);

/// Increasing sequence L_1 ⊆ L_2 ⊆ ... with a declared limit (its union).
/// Only finitely many members are ever materialized.
class LanguageChain {
 public:
  using Generator = std::function<Language(std::size_t)>;

  /// `growth_horizon`: index up to which strict growth is promised (chains
  /// built from finitely many parts stop growing after the last part).
  /// `cover_bound(i)`: index by which the i-th shortlex word of the limit
  /// has entered the chain.
  LanguageChain(ChainKind kind, Language limit, Generator generator, std::size_t strictness_bound,
                std::size_t growth_horizon, std::function<std::size_t(std::size_t)> cover_bound,
                std::size_t coverage_max_len);

  ChainKind kind() const noexcept { return kind_; }
  const Language& limit() const noexcept { return limit_; }
  /// L_n, n >= 1.
  Language at(std::size_t n) const;
  std::size_t strictness_bound() const noexcept { return strictness_bound_; }
  std::size_t growth_horizon() const noexcept { return growth_horizon_; }
  std::size_t cover_bound(std::size_t i) const { return cover_bound_(i); }
  /// Longest limit word the coverage invariant is checked for.
  std::size_t coverage_max_len() const noexcept { return coverage_max_len_; }

 private:
  ChainKind kind_;
  Language limit_;
  Generator generator_;
  std::size_t strictness_bound_;
  std::size_t growth_horizon_;
  std::function<std::size_t(std::size_t)> cover_bound_;
  std::size_t coverage_max_len_;
};

/// L_n = first n shortlex words of `limit`. Throws DomainError if `limit`
/// is finite.
LanguageChain chain_from_enumeration(const Language& limit);

/// L_n = union of parts 1..min(n, parts.size()). Every part must lie inside
/// `limit` (PreconditionError) and every limit word of length <=
/// `coverage_max_len` must be covered by some part (ValidationError).
LanguageChain chain_from_decomposition(std::vector<Language> parts, const Language& limit,
                                       std::size_t coverage_max_len = 8);

struct ChainValidation {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Increasing, strictness and union-coverage invariants for n <= n_max.
ChainValidation validate_chain(const LanguageChain& chain, std::size_t n_max);

enum class ConvergenceVerdict { Converging, Obstructed };

std::string to_string(ConvergenceVerdict verdict);

struct ChainRow {
  std::size_t n = 0;
  std::optional<Distance> distance;
  std::string flag;
};

struct ConvergenceResult {
  std::vector<ChainRow> rows;
  std::vector<Rational> ladder;
  std::vector<std::optional<std::size_t>> entered_at;  // per ladder rung
  ConvergenceVerdict verdict = ConvergenceVerdict::Converging;
  /// Human-readable verdict line, labelled as a within-n_max fact.
  std::string verdict_line() const;
};

/// 1/2, 1/4, ..., 1/64.
std::vector<Rational> default_epsilon_ladder();

/// d(L_n, limit) for n = 1..n_max. CONVERGING when every rung of the ladder
/// is beaten from some n onwards through n_max; OBSTRUCTED otherwise.
ConvergenceResult convergence_experiment(const LanguageChain& chain, const Metric& metric, std::size_t n_max,
                                         std::vector<Rational> ladder = default_epsilon_ladder());

/// "n,distance_lo,distance_hi" rows.
std::string chain_csv(const ConvergenceResult& result, const std::vector<std::string>& metadata = {});

inline constexpr const char* kChainCsvHeader = "n,distance_lo,distance_hi";

}  // namespace limitlab
