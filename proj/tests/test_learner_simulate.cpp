#include <sstream>

#include "doctest.h"
#include "limitlab/learner.hpp"
#include "limitlab/simulate.hpp"

using namespace limitlab;

namespace {
const Alphabet kA("a");
const Alphabet kAB("ab");

DataSet ds(const Alphabet& a, std::vector<Word> w) { return DataSet(a, std::move(w)); }

std::vector<Rational> exact_distances(const Trace& t) {
  std::vector<Rational> out;
  for (const auto& s : t.steps) out.push_back(*s.distance->exact);
  return out;
}

// A trace whose hypotheses are scripted, for the pure trace checkers.
Trace scripted(const std::vector<Language>& hyps, const Language& target) {
  Trace t{{}, target, exact_metric(), hyps.size()};
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    TraceStep s{i + 1, hyps[i], exact_metric()->distance(hyps[i], target),
                i == 0 || !equals(hyps[i], hyps[i - 1]), equals(hyps[i], target), ""};
    t.steps.push_back(s);
  }
  return t;
}
}  // namespace

TEST_CASE("range learner") {
  const auto l = range_learner();
  CHECK(equals(l->hypothesize(ds(kA, {"a", "aa", "a"})), Language::finite(kA, {"a", "aa"})));
  CHECK(equals(l->hypothesize(ds(kAB, {"b"})), Language::finite(kAB, {"b"})));
  const auto t = canonical_text(Language::pattern(kA, "a+"));
  std::vector<Word> expected;
  for (std::size_t n = 1; n <= 10; ++n) {
    expected.emplace_back(n, 'a');
    CHECK(equals(l->hypothesize(t.prefix(n)), Language::finite(kA, expected)));
  }
}

TEST_CASE("enumeration learner") {
  const auto l = enumeration_learner({Language::finite(kA, {"a"}), Language::finite(kA, {"a", "aa"})});
  CHECK(equals(l->hypothesize(ds(kA, {"aa"})), Language::finite(kA, {"a", "aa"})));
  CHECK(equals(l->hypothesize(ds(kA, {"a"})), Language::finite(kA, {"a"})));
  const auto single = enumeration_learner({Language::finite(kAB, {"a"})});
  CHECK(equals(single->hypothesize(ds(kAB, {"b"})), Language::finite(kAB, {"b"})));
}

TEST_CASE("memorizing learner") {
  const auto hub = Language::pattern(kAB, "a+");
  const auto l = memorizing_learner(hub, 2);
  CHECK(equals(l->hypothesize(ds(kAB, {"a", "aa", "aaa"})), hub));
  CHECK(equals(l->hypothesize(ds(kAB, {"a", "a", "a", "a"})), Language::finite(kAB, {"a"})));
  CHECK(equals(l->hypothesize(ds(kAB, {"b"})), Language::finite(kAB, {"b"})));
  // the last two items must both be first occurrences
  CHECK(equals(l->hypothesize(ds(kAB, {"a", "aa", "a"})), Language::finite(kAB, {"a", "aa"})));
}

TEST_CASE("simulation traces") {
  const auto target = Language::pattern(kA, "a+");
  const auto text = canonical_text(target);

  const auto counting = run(*range_learner(), text, target, counting_metric(target), 5);
  CHECK(exact_distances(counting) ==
        std::vector<Rational>{Rational(1), Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 5)});

  const auto exact = run(*range_learner(), text, target, exact_metric(), 5);
  CHECK(exact_distances(exact) == std::vector<Rational>(5, Rational(1)));

  const auto two = Language::finite(kA, {"a", "aa"});
  const auto enumer = enumeration_learner({Language::finite(kA, {"a"}), two});
  const auto t = run(*enumer, canonical_text(two), two, exact_metric(), 4);
  CHECK(exact_distances(t) == std::vector<Rational>{Rational(1), Rational(0), Rational(0), Rational(0)});
  CHECK(check_exact_stabilization(t) == 2u);
  CHECK(mind_changes(t) == 1);
}

TEST_CASE("out-of-domain steps are flagged and the run continues") {
  const auto hub = Language::pattern(kAB, "a+");
  const auto target = Language::pattern(kAB, "b+");
  // the target is infinite and not the hub, so every distance is undefined
  const auto t = run(*range_learner(), canonical_text(target), target, counting_metric(hub), 6);
  REQUIRE(t.steps.size() == 6);
  for (const auto& s : t.steps) {
    CHECK(s.flag == "domain_error");
    CHECK_FALSE(s.distance.has_value());
  }
  CHECK(check_limit_convergence(t, Rational(1, 2)) == std::nullopt);
}

TEST_CASE("stabilization and convergence checkers") {
  const auto target = Language::finite(kA, {"a"});
  const auto wrong = Language::finite(kA, {"aa"});
  CHECK(check_exact_stabilization(scripted({wrong, target, target, target}, target)) == 2u);
  CHECK(check_exact_stabilization(scripted({wrong, wrong}, target)) == std::nullopt);
  CHECK(check_exact_stabilization(scripted({target, wrong, target, target}, target)) == 3u);

  const auto aplus = Language::pattern(kA, "a+");
  const auto unary = run(*range_learner(), canonical_text(aplus), aplus, counting_metric(aplus), 100);
  CHECK(check_limit_convergence(unary, Rational::approximate(0.1)) == 11u);
  CHECK(check_limit_convergence(unary, Rational(3)) == 1u);
  const auto ones = run(*range_learner(), canonical_text(aplus), aplus, exact_metric(), 30);
  CHECK(check_limit_convergence(ones, Rational(1, 2)) == std::nullopt);
}

TEST_CASE("mind changes") {
  const auto A = Language::finite(kA, {"a"});
  const auto B = Language::finite(kA, {"aa"});
  CHECK(mind_changes(scripted({A, A, B, B, A}, A)) == 2);
  CHECK(mind_changes(scripted({A, A, A}, A)) == 0);
}

TEST_CASE("trace CSV") {
  const auto target = Language::pattern(kA, "a+");
  const auto t = run(*range_learner(), canonical_text(target), target, counting_metric(target), 100);
  const auto csv = trace_csv(t, {"config: test", "seed: none"});
  std::istringstream in(csv);
  std::string line;
  std::vector<std::string> rows;
  std::size_t comments = 0;
  while (std::getline(in, line)) {
    if (line.starts_with("#")) {
      ++comments;
      continue;
    }
    rows.push_back(line);
  }
  CHECK(comments == 2);
  REQUIRE(rows.size() == 101);
  CHECK(rows.front() == kTraceCsvHeader);
  CHECK(rows[1] == "1,finite,1,1,1,1,");
  CHECK(rows.back() == "100,finite,100,0.01,0.01,1,");
}
