#pragma once

#include <optional>
#include <string>

#include "limitlab/learner.hpp"
#include "limitlab/metric.hpp"
#include "limitlab/rational.hpp"
#include "limitlab/text.hpp"

namespace limitlab {

struct LockingBounds {
  std::size_t max_prefix_len = 12;
  std::size_t max_cont_len = 3;
  std::size_t word_pool_size = 6;
};

enum class LockingVerdict { Pass, Fail };

/// Outcome of checking one candidate against
///   (i)   range(l) ⊆ L,
///   (ii)  d(A(l), L) < ε,
///   (iii) d(A(l ∘ s), L) < ε for every continuation s in the searched universe.
/// PASS means no counterexample in that universe, not a proof.
struct LockingReport {
  DataSet candidate;
  Rational epsilon;
  std::size_t verified_up_to = 0;        // max continuation length
  std::size_t word_pool_size = 0;        // pool actually used (may be < requested for small L)
  std::vector<Word> pool;
  std::uint64_t universe_size = 0;       // continuations examined or scheduled
  LockingVerdict verdict = LockingVerdict::Pass;
  std::string reason;                     // empty on PASS
  std::optional<Distance> initial_distance;  // condition (ii)
  std::optional<DataSet> counterexample;     // first failing continuation
  std::optional<Language> counterexample_hypothesis;
  std::optional<Distance> counterexample_distance;  // empty if the metric rejected the pair

  bool passed() const noexcept { return verdict == LockingVerdict::Pass; }
  std::string summary() const;
};

LockingReport verify_locking(const DataSet& candidate, const Language& language, const Learner& learner,
                             const Metric& metric, const Rational& epsilon, std::size_t max_cont_len,
                             std::size_t word_pool_size);

struct LockingSearchResult {
  std::optional<LockingReport> found;
  std::size_t candidates_tried = 0;
  LockingBounds bounds;

  /// "found ..." or "not found under search policy ...".
  std::string summary() const;
};

/// Tries canonical-text prefixes of length 1..max_prefix_len and returns the
/// first that verifies. An empty result means "not found under search
/// policy", never "does not exist".
LockingSearchResult search_locking(const Language& language, const Learner& learner, const Metric& metric,
                                   const Rational& epsilon, const LockingBounds& bounds = {});

}  // namespace limitlab
