#include "doctest.h"
#include "limitlab/angluin.hpp"
#include "limitlab/errors.hpp"
#include "limitlab/simulate.hpp"
#include "oracles.hpp"

using namespace limitlab;

namespace {
const Alphabet kA("a");
const Alphabet kAB("ab");

Language fin(const Alphabet& a, std::vector<Word> w) { return Language::finite(a, std::move(w)); }

// Brute-force tell-tale test straight from the definition, on explicit sets.
bool brute_is_telltale(const std::set<std::string>& d, const std::set<std::string>& l,
                       const std::vector<std::set<std::string>>& family) {
  if (!std::includes(l.begin(), l.end(), d.begin(), d.end())) return false;
  for (const auto& m : family) {
    const bool contains_d = std::includes(m.begin(), m.end(), d.begin(), d.end());
    const bool proper_sub = m != l && std::includes(l.begin(), l.end(), m.begin(), m.end());
    if (contains_d && proper_sub) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("tell-tales in the two-word family") {
  const auto family = Family::explicit_members({fin(kA, {"a"}), fin(kA, {"a", "aa"})});
  const auto big = find_telltale(fin(kA, {"a", "aa"}), family, {});
  CHECK(big.verdict == TelltaleVerdict::Witness);
  CHECK(big.witness == std::vector<Word>{"aa"});
  const auto small = find_telltale(fin(kA, {"a"}), family, {});
  CHECK(small.verdict == TelltaleVerdict::Witness);
  CHECK(small.witness == std::vector<Word>{"a"});
  CHECK(check_family(family).verdict == FamilyVerdict::Learnable);
  CHECK_THROWS_AS(find_telltale(fin(kA, {"aaa"}), family, {}), PreconditionError);
}

TEST_CASE("finite language and its unary closure") {
  const auto family = Family::explicit_members({fin(kA, {"a"}), Language::pattern(kA, "a+")});
  const auto r = find_telltale(Language::pattern(kA, "a+"), family, {});
  REQUIRE(r.verdict == TelltaleVerdict::Witness);
  // {a} is blocked by the member {a}; {aa} is the next candidate in order
  CHECK(r.witness == std::vector<Word>{"aa"});
  REQUIRE(r.blocked.size() == 1);
  CHECK(r.blocked[0].candidate == std::vector<Word>{"a"});
  CHECK(r.blocked[0].blocker == 0);
  CHECK(verify_witness(Language::pattern(kA, "a+"), {"a", "aa"}, family));
  CHECK_FALSE(verify_witness(Language::pattern(kA, "a+"), {"a"}, family));
  CHECK(check_family(family).verdict == FamilyVerdict::Learnable);
}

TEST_CASE("Gold family is refuted") {
  const auto family = Family::schema(kA, {4, 6}, {Language::pattern(kA, "a+")});
  // non-empty unary sets of at most 4 words with length <= 6, plus a+
  CHECK(family.members().size() == 6 + 15 + 20 + 15 + 1);
  const auto r = find_telltale(Language::pattern(kA, "a+"), family, {4, 6});
  CHECK(r.verdict == TelltaleVerdict::Refuted);
  CHECK(r.blocked.size() == r.candidates_searched);
  const auto report = check_family(family);
  CHECK(report.verdict == FamilyVerdict::NotLearnable);
  CHECK(report.render(family).find("NOT_LEARNABLE") != std::string::npos);
}

TEST_CASE("without a closed schema the verdict caps at inconclusive") {
  const auto family = Family::explicit_members({fin(kA, {"a"}), fin(kA, {"aa"}), fin(kA, {"a", "aa"}),
                                                Language::pattern(kA, "a+")});
  const auto r = find_telltale(Language::pattern(kA, "a+"), family, {2, 2});
  CHECK(r.verdict == TelltaleVerdict::Inconclusive);
  CHECK(check_family(family, TelltaleBounds{2, 2}).verdict == FamilyVerdict::Unknown);
  // a larger bound finds {aaa}
  const auto wider = find_telltale(Language::pattern(kA, "a+"), family, {2, 3});
  CHECK(wider.verdict == TelltaleVerdict::Witness);
}

TEST_CASE("witnesses agree with a brute-force definition check") {
  oracle::Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Language> members;
    std::vector<std::set<std::string>> sets;
    const auto n = 2 + rng.below(4);
    for (std::uint64_t i = 0; i < n; ++i) {
      auto w = oracle::random_word_set(rng, "ab", 4, 2);
      const std::set<std::string> s(w.begin(), w.end());
      if (std::find(sets.begin(), sets.end(), s) != sets.end()) continue;
      sets.push_back(s);
      members.push_back(fin(kAB, std::move(w)));
    }
    const auto family = Family::explicit_members(members);
    const auto report = check_family(family, TelltaleBounds{4, 2});
    for (std::size_t i = 0; i < members.size(); ++i) {
      const auto& v = report.members[i];
      // a finite member is its own tell-tale, so a witness always exists
      REQUIRE(v.verdict == TelltaleVerdict::Witness);
      const std::set<std::string> d(v.witness.begin(), v.witness.end());
      CHECK(brute_is_telltale(d, sets[i], sets));
      CHECK(verify_witness(members[i], v.witness, family));
      // no strictly smaller subset of the member qualifies
      const std::vector<std::string> elems(sets[i].begin(), sets[i].end());
      for (std::uint32_t mask = 1; mask < (1u << elems.size()); ++mask) {
        std::set<std::string> sub;
        for (std::size_t b = 0; b < elems.size(); ++b) {
          if (mask & (1u << b)) sub.insert(elems[b]);
        }
        if (sub.size() < d.size()) CHECK_FALSE(brute_is_telltale(sub, sets[i], sets));
      }
    }
    CHECK(report.verdict == FamilyVerdict::Learnable);
  }
}

TEST_CASE("enlarging the bounds never turns a witness into a refutation") {
  const auto family = Family::explicit_members({fin(kA, {"a"}), fin(kA, {"a", "aa"}), Language::pattern(kA, "a+")});
  for (std::size_t size = 1; size <= 3; ++size) {
    for (std::size_t len = 1; len <= 4; ++len) {
      const auto r = check_family(family, TelltaleBounds{size, len});
      for (const auto& m : r.members) CHECK(m.verdict != TelltaleVerdict::Refuted);
    }
  }
}

TEST_CASE("enumeration order and stabilization of the enumeration learner") {
  const auto aplus = Language::pattern(kA, "a+");
  const auto ordered = enumeration_order({aplus, fin(kA, {"a", "aa"}), fin(kA, {"aa"}), fin(kA, {"a"})});
  CHECK(equals(ordered[0], fin(kA, {"a"})));
  CHECK(equals(ordered[1], fin(kA, {"aa"})));
  CHECK(equals(ordered[2], fin(kA, {"a", "aa"})));
  CHECK(equals(ordered[3], aplus));

  for (const auto& members : {std::vector<Language>{fin(kA, {"a"}), fin(kA, {"a", "aa"})},
                              std::vector<Language>{fin(kA, {"a"}), aplus}}) {
    const auto family = Family::explicit_members(members);
    const auto report = check_family(family);
    REQUIRE(report.verdict == FamilyVerdict::Learnable);
    const auto horizon = stabilization_horizon(family, report);
    const auto learner = enumeration_learner(enumeration_order(members));
    for (const auto& target : members) {
      const auto trace = run(*learner, canonical_text(target), target, exact_metric(), horizon);
      CHECK(check_exact_stabilization(trace).has_value());
    }
  }
}

TEST_CASE("report rendering") {
  const auto family = Family::explicit_members({fin(kA, {"a"}), Language::pattern(kA, "a+")});
  const auto text = check_family(family).render(family);
  CHECK(text.find("MEMBER 0 WITNESS {a}") != std::string::npos);
  CHECK(text.find("MEMBER 1 WITNESS {aa}") != std::string::npos);
  CHECK(text.find("FAMILY LEARNABLE") != std::string::npos);
}
