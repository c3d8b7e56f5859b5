#include <set>

#include "doctest.h"
#include "limitlab/errors.hpp"
#include "limitlab/language.hpp"
#include "oracles.hpp"

using namespace limitlab;

namespace {
const Alphabet kA("a");
const Alphabet kAB("ab");

std::set<std::string> as_set(const std::vector<Word>& v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("alphabet") {
  CHECK_THROWS_AS(Alphabet(""), ValidationError);
  CHECK_THROWS_AS(Alphabet("aa"), ValidationError);
  CHECK_THROWS_AS(Alphabet("a|"), ValidationError);
  CHECK(kAB.shortlex_less("b", "aa"));
  CHECK(kAB.shortlex_less("ab", "ba"));
  CHECK_FALSE(kAB.shortlex_less("a", "a"));
  CHECK_THROWS_AS(kA.validate_word("ab"), DomainError);
  CHECK_THROWS_AS(kA.validate_word(""), DomainError);

  const auto words = oracle::universe("ab", 6);
  for (std::size_t i = 0; i < words.size(); ++i) {
    CHECK(kAB.universe_rank(words[i]) == static_cast<long double>(i + 1));
    CHECK(kAB.universe_word(i + 1) == words[i]);
  }
}

TEST_CASE("membership") {
  const auto two = Language::finite(kA, {"a", "aa"});
  CHECK(membership(two, "aa"));
  CHECK_FALSE(membership(Language::pattern(kAB, "a+"), "ab"));
  CHECK(membership(Language::pattern(kA, "a+"), "aaaa"));
  CHECK_THROWS_AS(membership(two, "b"), DomainError);
}

TEST_CASE("shortlex enumeration") {
  CHECK(enumerate(Language::pattern(kA, "a+"), 3, 10) == std::vector<Word>{"a", "aa", "aaa"});
  CHECK(enumerate(Language::finite(kAB, {"ba", "b", "a"}), 5, 10) == std::vector<Word>{"a", "b", "ba"});
  CHECK(enumerate(Language::pattern(kAB, "(a|b)+"), 4, 2) == std::vector<Word>{"a", "b", "aa", "ab"});
  CHECK(enumerate(Language::pattern(kAB, "(a|b)+"), 100, 2).size() == 6);

  const auto sparse = Language::pattern(kAB, "a(b|aa)*b");
  const auto expected = oracle::regex_language("a(b|aa)*b", "ab", 9);
  const auto got = enumerate(sparse, 1000, 9);
  CHECK(as_set(got) == expected);
  CHECK(std::is_sorted(got.begin(), got.end(), ShortlexLess{&kAB}));
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(nth_word(sparse, i + 1) == got[i]);
}

TEST_CASE("cardinality") {
  CHECK(cardinality(Language::finite(kA, {"a", "aa"})) == Cardinality::finite(2));
  CHECK(cardinality(Language::pattern(kA, "a+")).infinite);
  CHECK(cardinality(Language::pattern(kA, "a|aa")) == Cardinality::finite(2));
  CHECK(cardinality(Language::pattern(kAB, "(a|b)(a|b)(a|b)")) == Cardinality::finite(8));
  CHECK(nth_word(Language::pattern(kA, "a|aa"), 3) == std::nullopt);
}

TEST_CASE("equality, subset and intersection on the documented cases") {
  const auto aplus = Language::pattern(kA, "a+");
  CHECK(equals(aplus, Language::pattern(kA, "aa*a|a")));
  CHECK_FALSE(equals(Language::finite(kA, {"a"}), Language::finite(kA, {"a", "aa"})));
  CHECK(equals(aplus, aplus));
  CHECK(equals(Language::pattern(kA, "a|aa"), Language::finite(kA, {"aa", "a"})));

  CHECK(is_proper_subset(Language::finite(kA, {"a", "aa"}), aplus));
  CHECK_FALSE(is_proper_subset(aplus, Language::finite(kA, {"a", "aa"})));
  CHECK_FALSE(is_proper_subset(Language::finite(kA, {"a"}), Language::finite(kA, {"a"})));

  const auto aplus2 = Language::pattern(kAB, "a+");
  CHECK(intersection_cardinality(Language::finite(kAB, {"a", "aa", "b"}), aplus2) == Cardinality::finite(2));
  CHECK(intersection_cardinality(Language::finite(kAB, {"b"}), aplus2).is_zero());
  CHECK(intersection_cardinality(aplus2, aplus2).infinite);
  CHECK(intersection_cardinality(Language::pattern(kAB, "a+"), Language::pattern(kAB, "b+")).is_zero());
}

TEST_CASE("alphabet mismatch is a domain error") {
  CHECK_THROWS_AS(equals(Language::pattern(kA, "a+"), Language::pattern(kAB, "a+")), DomainError);
}

TEST_CASE("malformed patterns are rejected") {
  for (const char* bad : {"", "(a", "a)", "|a", "a||b", "*", "c", "a**(", "()"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Language::pattern(kAB, bad), ValidationError);
  }
  // the empty word has no place in the language class
  CHECK_THROWS_AS(Language::pattern(kAB, "a*"), ValidationError);
}

TEST_CASE("pattern compiler agrees with std::regex on random patterns") {
  oracle::Rng rng(2024);
  const auto words = oracle::universe("ab", 7);
  for (int trial = 0; trial < 150; ++trial) {
    const auto p = oracle::random_pattern(rng, "ab");
    CAPTURE(p);
    const auto lang = Language::pattern(kAB, p);
    const std::regex re(p);
    for (const auto& w : words) {
      if (lang.contains(w) != std::regex_match(w, re)) {
        FAIL_CHECK("disagreement on " << w);
        break;
      }
    }
  }
}

TEST_CASE("cardinality agrees with a pumping-window oracle") {
  // A DFA with n states accepts infinitely many words iff it accepts one of
  // length in [n, 2n); otherwise every word has length < n.
  oracle::Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = oracle::random_pattern(rng, "ab");
    CAPTURE(p);
    const auto lang = Language::pattern(kAB, p);
    const std::size_t n = lang.dfa().num_states();
    const auto upto = oracle::regex_language(p, "ab", std::min<std::size_t>(2 * n, 14));
    bool long_word = false;
    std::size_t short_count = 0;
    for (const auto& w : upto) {
      if (w.size() >= n) long_word = true;
      else ++short_count;
    }
    if (2 * n > 14) continue;  // window too wide for brute force
    const auto c = cardinality(lang);
    CHECK(c.infinite == long_word);
    if (!long_word) CHECK(c.count == short_count);
  }
}

TEST_CASE("first_difference returns the shortlex-least word of the symmetric difference") {
  oracle::Rng rng(5);
  const auto words = oracle::universe("ab", 8);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = oracle::random_pattern(rng, "ab");
    const auto q = oracle::random_pattern(rng, "ab");
    CAPTURE(p);
    CAPTURE(q);
    const auto lp = Language::pattern(kAB, p);
    const auto lq = Language::pattern(kAB, q);
    std::optional<std::string> expected;
    for (const auto& w : words) {
      if (oracle::regex_member(p, w) != oracle::regex_member(q, w)) {
        expected = w;
        break;
      }
    }
    const auto got = first_difference(lp, lq);
    if (expected) CHECK(got == expected);
    else CHECK((!got || got->size() > 8));
  }
}

TEST_CASE("shortlex enumerator streams a large language lazily") {
  ShortlexEnumerator e(Language::pattern(kAB, "(a|b)+"));
  std::optional<Word> w;
  for (int i = 0; i < 5000; ++i) w = e.next();
  CHECK(w == kAB.universe_word(5000));
}
