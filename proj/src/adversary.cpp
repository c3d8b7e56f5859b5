#include "limitlab/adversary.hpp"

#include <sstream>

#include "limitlab/errors.hpp"

namespace limitlab {

std::string to_string(AdversaryPolicy policy) {
  return policy == AdversaryPolicy::FeedFresh ? "FEED_FRESH" : "REPEAT_RANGE";
}

std::string to_string(AdversaryPattern pattern) {
  switch (pattern) {
    case AdversaryPattern::FeedFreshTail: return "FEED_FRESH_TAIL";
    case AdversaryPattern::RepeatRangeTail: return "REPEAT_RANGE_TAIL";
    case AdversaryPattern::Mixed: return "MIXED";
  }
  return "?";
}

AdversaryRun run_adversary(const Learner& learner, const Language& hub, std::size_t horizon) {
  if (hub.is_finite()) throw PreconditionError("the adversary needs an infinite language, got " + hub.describe());
  if (horizon == 0) throw PreconditionError("horizon must be >= 1");

  CanonicalWords fresh(hub);
  std::uint64_t next_fresh = 1;
  Word first = *fresh.get(next_fresh++);
  DataSet produced(hub.alphabet(), {first});
  AdversaryRun run{learner.describe(), hub, produced, {}, 0};
  Word least = first;  // shortlex-least word of range(produced)
  const ShortlexLess less{&hub.alphabet()};

  Language hypothesis = learner.hypothesize(produced);
  run.steps.push_back({1, first, AdversaryPolicy::FeedFresh, hypothesis, true});
  for (std::size_t k = 2; k <= horizon; ++k) {
    const bool locked_to_range = equals(hypothesis, range(produced));
    Word w;
    AdversaryPolicy policy;
    if (locked_to_range) {
      w = *fresh.get(next_fresh++);
      policy = AdversaryPolicy::FeedFresh;
      if (less(w, least)) least = w;
    } else {
      w = least;
      policy = AdversaryPolicy::RepeatRange;
    }
    produced.push_back(w);
    Language next = learner.hypothesize(produced);
    const bool changed = !equals(next, hypothesis);
    hypothesis = std::move(next);
    run.steps.push_back({k, std::move(w), policy, hypothesis, changed});
  }
  run.produced = std::move(produced);
  for (const auto& s : run.steps) run.mind_changes += s.changed ? 1 : 0;
  return run;
}

AdversaryPattern AdversaryRun::tail_pattern(std::size_t suffix) const {
  suffix = std::min(suffix, steps.size());
  bool fresh = false, repeat = false;
  for (std::size_t i = steps.size() - suffix; i < steps.size(); ++i) {
    (steps[i].policy == AdversaryPolicy::FeedFresh ? fresh : repeat) = true;
  }
  if (fresh && !repeat) return AdversaryPattern::FeedFreshTail;
  if (repeat && !fresh) return AdversaryPattern::RepeatRangeTail;
  return AdversaryPattern::Mixed;
}

std::size_t AdversaryRun::wrong_suffix_length(std::size_t suffix) const {
  const AdversaryPattern pattern = tail_pattern(suffix);
  if (pattern == AdversaryPattern::Mixed) return 0;
  const Language correct = pattern == AdversaryPattern::FeedFreshTail ? hub : range(produced);
  std::size_t n = 0;
  for (auto it = steps.rbegin(); it != steps.rend() && !equals(it->hypothesis, correct); ++it) ++n;
  return n;
}

bool AdversaryRun::defeats_learner() const {
  const std::size_t horizon = steps.size();
  if (mind_changes * 10 >= horizon) return true;
  const std::size_t half = (horizon + 1) / 2;
  return wrong_suffix_length(half) >= half;
}

std::string AdversaryRun::csv() const {
  std::ostringstream out;
  out << kAdversaryCsvHeader << '\n';
  for (const auto& s : steps) {
    out << s.k << ',' << s.word << ',' << to_string(s.policy) << ','
        << (s.hypothesis.kind() == LanguageKind::Finite ? "finite" : "regular") << ',' << (s.changed ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace limitlab
