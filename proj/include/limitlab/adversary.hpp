#pragma once

#include <optional>
#include <string>
#include <vector>

#include "limitlab/learner.hpp"
#include "limitlab/text.hpp"

namespace limitlab {

enum class AdversaryPolicy { FeedFresh, RepeatRange };

std::string to_string(AdversaryPolicy policy);

/// Which policy held over the tail of the run.
enum class AdversaryPattern { FeedFreshTail, RepeatRangeTail, Mixed };

std::string to_string(AdversaryPattern pattern);

struct AdversaryStep {
  std::size_t k = 0;
  Word word;
  AdversaryPolicy policy = AdversaryPolicy::FeedFresh;
  Language hypothesis;  // learner's conjecture after seeing word k
  bool changed = false;
};

struct AdversaryRun {
  std::string learner;
  Language hub;
  DataSet produced;
  std::vector<AdversaryStep> steps;
  /// Steps whose hypothesis differs from the previous one; step 1 counts.
  std::size_t mind_changes = 0;

  /// Policy in force over the final `suffix` steps (Mixed if both occur).
  AdversaryPattern tail_pattern(std::size_t suffix) const;

  /// Longest suffix on which the hypothesis differs from the language the
  /// tail pattern is a text for: the hub under FEED_FRESH, range(produced)
  /// under REPEAT_RANGE. Zero for mixed tails.
  std::size_t wrong_suffix_length(std::size_t suffix) const;

  /// mind_changes >= horizon/10, or a wrong suffix of at least horizon/2.
  bool defeats_learner() const;

  std::string csv() const;
};

inline constexpr const char* kAdversaryCsvHeader = "k,word,policy,hypothesis_kind,changed";

/// Gold-style adaptive presentation. Step 1 feeds the first word of `hub`.
/// Afterwards, when the learner's conjecture on the produced data equals
/// range(produced) the next unused shortlex word of `hub` is fed;
/// otherwise the shortlex-least word of the current range is repeated.
AdversaryRun run_adversary(const Learner& learner, const Language& hub, std::size_t horizon);

}  // namespace limitlab
