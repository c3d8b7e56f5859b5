#include "doctest.h"
#include "limitlab/adversary.hpp"
#include "limitlab/angluin.hpp"
#include "limitlab/simulate.hpp"

using namespace limitlab;

namespace {
const Alphabet kA("a");

std::vector<LearnerPtr> builtin_learners(const Language& hub) {
  return {range_learner(), memorizing_learner(hub, 2),
          enumeration_learner(enumeration_order(Family::schema(kA, {4, 6}, {hub}).members()))};
}
}  // namespace

TEST_CASE("adversary against the range learner always feeds fresh words") {
  const auto hub = Language::pattern(kA, "a+");
  const auto r = run_adversary(*range_learner(), hub, 6);
  std::vector<Word> expected;
  for (std::size_t n = 1; n <= 6; ++n) expected.emplace_back(n, 'a');
  CHECK(r.produced.items() == expected);
  CHECK(r.mind_changes == 6);
  for (const auto& s : r.steps) CHECK(s.policy == AdversaryPolicy::FeedFresh);
  CHECK(r.tail_pattern(3) == AdversaryPattern::FeedFreshTail);
}

TEST_CASE("adversary against the memorizing learner alternates") {
  const auto hub = Language::pattern(kA, "a+");
  const auto r = run_adversary(*memorizing_learner(hub, 2), hub, 100);
  CHECK(r.mind_changes >= 25);
  CHECK(r.tail_pattern(50) == AdversaryPattern::Mixed);
}

TEST_CASE("adversary invariants for every built-in learner") {
  const auto hub = Language::pattern(kA, "a+");
  for (const auto& learner : builtin_learners(hub)) {
    for (const std::size_t horizon : {100u, 1000u}) {
      CAPTURE(learner->name());
      CAPTURE(horizon);
      const auto r = run_adversary(*learner, hub, horizon);
      REQUIRE(r.steps.size() == horizon);
      CHECK(within(r.produced, hub));
      const bool many_changes = r.mind_changes * 10 >= horizon;
      const bool long_wrong = r.wrong_suffix_length(horizon / 2) >= horizon / 2;
      CHECK((many_changes || long_wrong));
      CHECK(r.defeats_learner());
    }
  }
}

TEST_CASE("produced data is a prefix of a text for a family member") {
  // Completing the produced prefix with the canonical text of its range
  // yields a text for a finite member; the same prefix continued with the
  // canonical text of the hub yields a text for the hub. Both completions are
  // surjective onto their language within a bounded window.
  const auto hub = Language::pattern(kA, "a+");
  const auto r = run_adversary(*memorizing_learner(hub, 2), hub, 60);
  const auto finite = range(r.produced);
  const auto completed = replay_text(r.produced, finite);
  CHECK(within(completed.prefix(200), finite));
  CHECK(equals(range(completed.prefix(60 + finite.words().size())), finite));
  const auto to_hub = replay_text(r.produced, hub);
  CHECK(within(to_hub.prefix(200), hub));
}

TEST_CASE("adversary CSV") {
  const auto hub = Language::pattern(kA, "a+");
  const auto csv = run_adversary(*range_learner(), hub, 3).csv();
  CHECK(csv == "k,word,policy,hypothesis_kind,changed\n1,a,FEED_FRESH,finite,1\n2,aa,FEED_FRESH,finite,1\n"
               "3,aaa,FEED_FRESH,finite,1\n");
}
