#include "limitlab/locking.hpp"

#include "limitlab/errors.hpp"

namespace limitlab {

namespace {

bool close_enough(const Learner& learner, const Metric& metric, const Language& language, const Rational& epsilon,
                  const DataSet& data, Language& hypothesis, std::optional<Distance>& distance) {
  hypothesis = learner.hypothesize(data);
  try {
    distance = metric.distance(hypothesis, language);
  } catch (const DomainError&) {
    distance.reset();
    return false;
  }
  return distance->below(epsilon);
}

std::uint64_t continuation_count(std::size_t pool, std::size_t max_len) {
  std::uint64_t total = 0, level = 1;
  for (std::size_t len = 1; len <= max_len; ++len) {
    level *= pool;
    total += level;
  }
  return total;
}

}  // namespace

std::string LockingReport::summary() const {
  std::string out = std::string(passed() ? "PASS" : "FAIL") + " candidate=" + candidate.describe() +
                    " epsilon=" + epsilon.to_string() + " max_cont_len=" + std::to_string(verified_up_to) +
                    " pool=" + std::to_string(word_pool_size) + " universe=" + std::to_string(universe_size);
  if (!reason.empty()) out += " reason=\"" + reason + "\"";
  if (counterexample) {
    out += " counterexample=" + counterexample->describe();
    if (counterexample_hypothesis) out += " hypothesis=" + counterexample_hypothesis->describe();
    out += " distance=" + (counterexample_distance ? counterexample_distance->to_string() : std::string("domain_error"));
  }
  return out;
}

LockingReport verify_locking(const DataSet& candidate, const Language& language, const Learner& learner,
                             const Metric& metric, const Rational& epsilon, std::size_t max_cont_len,
                             std::size_t word_pool_size) {
  if (epsilon <= Rational(0)) throw PreconditionError("epsilon must be positive");
  if (max_cont_len == 0 || word_pool_size == 0) throw PreconditionError("locking bounds must be positive");

  LockingReport report{candidate, epsilon, max_cont_len, 0, {}, 0, LockingVerdict::Pass, "", {}, {}, {}, {}};
  if (!within(candidate, language)) {
    report.verdict = LockingVerdict::Fail;
    report.reason = "not a subset";
    return report;
  }
  report.pool = enumerate(language, word_pool_size, SIZE_MAX);
  report.word_pool_size = report.pool.size();
  report.universe_size = continuation_count(report.pool.size(), max_cont_len);

  Language hypothesis = language;
  std::optional<Distance> distance;
  const bool initial_ok = close_enough(learner, metric, language, epsilon, candidate, hypothesis, distance);
  report.initial_distance = distance;
  if (!initial_ok) {
    report.verdict = LockingVerdict::Fail;
    report.reason = "hypothesis on the candidate is not epsilon-close";
  }

  // Continuations in order of length, then lexicographically by pool index.
  const std::size_t p = report.pool.size();
  for (std::size_t len = 1; len <= max_cont_len; ++len) {
    std::vector<std::size_t> idx(len, 0);
    while (true) {
      DataSet data = candidate;
      for (const auto i : idx) data.push_back(report.pool[i]);
      if (!close_enough(learner, metric, language, epsilon, data, hypothesis, distance)) {
        std::vector<Word> cont;
        for (const auto i : idx) cont.push_back(report.pool[i]);
        report.verdict = LockingVerdict::Fail;
        if (!report.reason.empty()) report.reason += "; ";
        report.reason += "continuation leaves the epsilon-ball";
        report.counterexample = DataSet(language.alphabet(), std::move(cont));
        report.counterexample_hypothesis = hypothesis;
        report.counterexample_distance = distance;
        return report;
      }
      std::size_t pos = len;
      while (pos > 0 && ++idx[pos - 1] == p) idx[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return report;
}

std::string LockingSearchResult::summary() const {
  const std::string searched = "max_prefix_len=" + std::to_string(bounds.max_prefix_len) +
                               " max_cont_len=" + std::to_string(bounds.max_cont_len) +
                               " pool=" + std::to_string(bounds.word_pool_size);
  if (found) return "found candidate=" + found->candidate.describe() + " " + searched;
  return "not found under search policy (canonical prefixes, " + searched + ", " +
         std::to_string(candidates_tried) + " candidates tried)";
}

LockingSearchResult search_locking(const Language& language, const Learner& learner, const Metric& metric,
                                   const Rational& epsilon, const LockingBounds& bounds) {
  if (bounds.max_prefix_len == 0) throw PreconditionError("max_prefix_len must be positive");
  LockingSearchResult result{std::nullopt, 0, bounds};
  const Text text = canonical_text(language);
  for (std::size_t len = 1; len <= bounds.max_prefix_len; ++len) {
    ++result.candidates_tried;
    LockingReport report =
        verify_locking(text.prefix(len), language, learner, metric, epsilon, bounds.max_cont_len, bounds.word_pool_size);
    if (report.passed()) {
      result.found = std::move(report);
      break;
    }
  }
  return result;
}

}  // namespace limitlab
