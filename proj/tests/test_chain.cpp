#include "doctest.h"
#include "limitlab/chain.hpp"
#include "limitlab/errors.hpp"

using namespace limitlab;

namespace {
const Alphabet kA("a");
const Alphabet kAB("ab");

Language fin(const Alphabet& a, std::vector<Word> w) { return Language::finite(a, std::move(w)); }
}  // namespace

TEST_CASE("enumeration chains") {
  const auto unary = chain_from_enumeration(Language::pattern(kA, "a+"));
  CHECK(equals(unary.at(3), fin(kA, {"a", "aa", "aaa"})));
  const auto binary = chain_from_enumeration(Language::pattern(kAB, "(a|b)+"));
  CHECK(equals(binary.at(2), fin(kAB, {"a", "b"})));
  for (const auto* c : {&unary, &binary}) {
    CHECK(is_proper_subset(c->at(1), c->at(2)));
    CHECK(is_proper_subset(c->at(2), c->at(3)));
  }
  CHECK(unary.strictness_bound() == 1);
  CHECK(unary.cover_bound(7) == 7);
  CHECK_THROWS_AS(chain_from_enumeration(fin(kA, {"a", "aa"})), DomainError);
}

TEST_CASE("decomposition chains") {
  const auto small = chain_from_decomposition({fin(kA, {"a"}), fin(kA, {"aa"}), fin(kA, {"aaa"})},
                                              Language::pattern(kA, "a|aa|aaa"), 3);
  CHECK(equals(small.at(2), fin(kA, {"a", "aa"})));
  CHECK(equals(small.at(7), fin(kA, {"a", "aa", "aaa"})));

  const auto nested = chain_from_decomposition({fin(kA, {"a"}), fin(kA, {"a", "aa"})}, fin(kA, {"a", "aa"}), 3);
  CHECK(equals(nested.at(1), fin(kA, {"a"})));
  CHECK(equals(nested.at(2), fin(kA, {"a", "aa"})));
  CHECK(is_subset(nested.at(1), nested.at(2)));

  CHECK_THROWS_AS(chain_from_decomposition({fin(kAB, {"b"})}, Language::pattern(kAB, "a+")), PreconditionError);
  // the parts miss "ab"
  CHECK_THROWS_AS(
      chain_from_decomposition({Language::pattern(kAB, "a+"), Language::pattern(kAB, "b+")},
                               Language::pattern(kAB, "(a|b)+"), 4),
      ValidationError);

  const auto regular = chain_from_decomposition(
      {Language::pattern(kAB, "a+"), Language::pattern(kAB, "b(a|b)*"), Language::pattern(kAB, "a+b(a|b)*")},
      Language::pattern(kAB, "(a|b)+"));
  CHECK(equals(regular.at(3), Language::pattern(kAB, "(a|b)+")));
  CHECK(regular.growth_horizon() == 3);
}

TEST_CASE("chain validation") {
  CHECK(validate_chain(chain_from_enumeration(Language::pattern(kAB, "(a|b)+")), 50).ok);

  // a chain that shrinks at n=3
  const auto limit = Language::pattern(kA, "a+");
  LanguageChain bad(
      ChainKind::Custom, limit,
      [](std::size_t n) {
        return n == 3 ? Language::finite(kA, {"a"}) : Language::finite(kA, std::vector<Word>{std::string(n, 'a')});
      },
      1, 0, [](std::size_t i) { return i; }, 4);
  const auto v = validate_chain(bad, 10);
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.problems.empty());
}

TEST_CASE("convergence experiments") {
  const auto aplus = Language::pattern(kA, "a+");
  const auto chain = chain_from_enumeration(aplus);

  const auto counting = convergence_experiment(chain, *counting_metric(aplus), 100);
  for (const auto& row : counting.rows) CHECK(*row.distance->exact == Rational(1, static_cast<std::int64_t>(row.n)));
  CHECK(counting.verdict == ConvergenceVerdict::Converging);
  CHECK(counting.entered_at.back() == 65u);

  const auto exact = convergence_experiment(chain, *exact_metric(), 100);
  for (const auto& row : exact.rows) CHECK(*row.distance->exact == Rational(1));
  CHECK(exact.verdict == ConvergenceVerdict::Obstructed);
  CHECK(exact.verdict_line().starts_with("VERDICT OBSTRUCTED"));

  const auto symdiff = convergence_experiment(chain, *symdiff_metric(2), 40);
  for (std::size_t i = 1; i < symdiff.rows.size(); ++i) CHECK(symdiff.rows[i].distance->hi < symdiff.rows[i - 1].distance->lo);
  CHECK(symdiff.verdict == ConvergenceVerdict::Converging);
}

TEST_CASE("exact metrics obstruct every strictly increasing chain below the gap") {
  const std::vector<LanguageChain> chains{
      chain_from_enumeration(Language::pattern(kAB, "(a|b)+")),
      chain_from_enumeration(Language::pattern(kAB, "a(ba)*")),
      chain_from_enumeration(Language::pattern(kA, "aa+")),
  };
  const std::vector<Rational> ladder{Rational(99, 100), Rational(1, 2), Rational(1, 1000)};
  for (const auto& c : chains) {
    const auto r = convergence_experiment(c, *exact_metric(), 60, ladder);
    CHECK(r.verdict == ConvergenceVerdict::Obstructed);
    for (const auto& e : r.entered_at) CHECK_FALSE(e.has_value());
  }
}

TEST_CASE("out-of-domain rows are flagged") {
  const auto chain = chain_from_enumeration(Language::pattern(kAB, "b+"));
  const auto r = convergence_experiment(chain, *counting_metric(Language::pattern(kAB, "a+")), 5);
  for (const auto& row : r.rows) {
    CHECK(row.flag == "domain_error");
    CHECK_FALSE(row.distance.has_value());
  }
  CHECK(r.verdict == ConvergenceVerdict::Obstructed);
}

TEST_CASE("chain CSV") {
  const auto aplus = Language::pattern(kA, "a+");
  const auto r = convergence_experiment(chain_from_enumeration(aplus), *counting_metric(aplus), 3);
  CHECK(chain_csv(r) == "n,distance_lo,distance_hi\n1,1,1\n2,0.5,0.5\n3,0.333333333333,0.333333333333\n");
}
