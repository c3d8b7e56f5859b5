#include "limitlab/simulate.hpp"

#include <cstdio>
#include <sstream>

#include "limitlab/errors.hpp"

namespace limitlab {

std::string format_real(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12Lg", v);
  return buf;
}

Trace run(const Learner& learner, const Text& text, const Language& target, MetricPtr metric, std::size_t horizon) {
  if (horizon == 0) throw PreconditionError("horizon must be >= 1");
  if (!metric) throw PreconditionError("run needs a metric");
  Trace trace{{}, target, metric, horizon};
  trace.steps.reserve(horizon);
  DataSet data(text.source().alphabet(), {text.at(1)});
  for (std::size_t k = 1; k <= horizon; ++k) {
    if (k > 1) data.push_back(text.at(k));
    TraceStep step{k, learner.hypothesize(data), std::nullopt, false, false, ""};
    step.changed = k == 1 || !equals(step.hypothesis, trace.steps.back().hypothesis);
    step.matches_target = equals(step.hypothesis, target);
    try {
      step.distance = metric->distance(step.hypothesis, target);
    } catch (const DomainError&) {
      step.flag = "domain_error";
    }
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

std::optional<std::size_t> check_exact_stabilization(const Trace& trace) {
  std::optional<std::size_t> from;
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend() && it->matches_target; ++it) from = it->k;
  return from;
}

std::optional<std::size_t> check_limit_convergence(const Trace& trace, const Rational& epsilon) {
  if (epsilon <= Rational(0)) throw PreconditionError("epsilon must be positive");
  std::optional<std::size_t> from;
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    if (!it->distance || !it->distance->below(epsilon)) break;
    from = it->k;
  }
  return from;
}

std::size_t mind_changes(const Trace& trace) {
  std::size_t changed = 0;
  for (const auto& s : trace.steps) changed += s.changed ? 1 : 0;
  return changed == 0 ? 0 : changed - 1;
}

std::string trace_csv(const Trace& trace, const std::vector<std::string>& metadata) {
  std::ostringstream out;
  for (const auto& line : metadata) out << "# " << line << '\n';
  out << kTraceCsvHeader << '\n';
  for (const auto& s : trace.steps) {
    const Cardinality card = s.hypothesis.cardinality();
    out << s.k << ',' << (s.hypothesis.kind() == LanguageKind::Finite ? "finite" : "regular") << ','
        << (card.infinite ? std::string("inf") : std::to_string(card.count)) << ',';
    if (s.distance) {
      out << format_real(s.distance->lo) << ',' << format_real(s.distance->hi);
    } else {
      out << ',';
    }
    out << ',' << (s.changed ? 1 : 0) << ',' << s.flag << '\n';
  }
  return out.str();
}

}  // namespace limitlab
