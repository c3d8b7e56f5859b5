#pragma once

#include <optional>
#include <string>
#include <vector>

#include "limitlab/learner.hpp"
#include "limitlab/metric.hpp"
#include "limitlab/rational.hpp"
#include "limitlab/text.hpp"

namespace limitlab {

struct TraceStep {
  std::size_t k = 0;
  Language hypothesis;
  std::optional<Distance> distance;  // empty when the metric rejected the pair
  bool changed = false;
  bool matches_target = false;
  std::string flag;  // "" or a short reason such as "domain_error"
};

/// Per-step record of one learner-on-text session.
struct Trace {
  std::vector<TraceStep> steps;
  Language target;
  MetricPtr metric;
  std::size_t horizon = 0;
};

/// Evaluates the learner on t_1 .. t_horizon. Domain errors from the metric
/// are recorded as flagged steps rather than aborting the run.
Trace run(const Learner& learner, const Text& text, const Language& target, MetricPtr metric, std::size_t horizon);

/// Smallest n0 with hypothesis_k = target for all n0 <= k <= horizon.
/// A within-horizon fact, not a proof of exact learning.
std::optional<std::size_t> check_exact_stabilization(const Trace& trace);

/// Smallest n0 with d_k < epsilon for all n0 <= k <= horizon. Flagged steps
/// never count as close; intervals compare by their upper bound.
std::optional<std::size_t> check_limit_convergence(const Trace& trace, const Rational& epsilon);

/// Number of hypothesis changes after the initial conjecture.
std::size_t mind_changes(const Trace& trace);

/// "k,hypothesis_kind,hypothesis_card,distance_lo,distance_hi,changed,flag"
/// rows preceded by `#`-prefixed metadata lines.
std::string trace_csv(const Trace& trace, const std::vector<std::string>& metadata);

inline constexpr const char* kTraceCsvHeader = "k,hypothesis_kind,hypothesis_card,distance_lo,distance_hi,changed,flag";

/// 12 significant digits.
std::string format_real(long double v);

}  // namespace limitlab
