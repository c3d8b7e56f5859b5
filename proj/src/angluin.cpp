#include "limitlab/angluin.hpp"

#include <algorithm>
#include <sstream>

#include "limitlab/errors.hpp"

namespace limitlab {

std::string to_string(TelltaleVerdict verdict) {
  switch (verdict) {
    case TelltaleVerdict::Witness: return "WITNESS";
    case TelltaleVerdict::Refuted: return "REFUTED";
    case TelltaleVerdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string to_string(FamilyVerdict verdict) {
  switch (verdict) {
    case FamilyVerdict::Learnable: return "LEARNABLE";
    case FamilyVerdict::NotLearnable: return "NOT_LEARNABLE";
    case FamilyVerdict::Unknown: return "UNKNOWN";
  }
  return "?";
}

namespace {

// Calls `visit` on every size-k combination of indices 0..n-1 in
// lexicographic order; stops when visit returns false.
template <typename Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::string join(const std::vector<Word>& words) {
  std::string out = "{";
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ',';
    out += words[i];
  }
  return out + "}";
}

}  // namespace

Family::Family(std::vector<Language> members, std::optional<FiniteSchema> schema)
    : members_(std::move(members)), schema_(schema) {
  if (members_.empty()) throw PreconditionError("a family needs at least one member");
  for (const auto& m : members_) {
    if (!(m.alphabet() == members_.front().alphabet())) throw PreconditionError("family spans several alphabets");
  }
}

Family Family::explicit_members(std::vector<Language> members) { return Family(std::move(members), std::nullopt); }

Family Family::schema(const Alphabet& alphabet, FiniteSchema schema, std::vector<Language> extras) {
  if (schema.max_words == 0 || schema.max_len == 0) throw PreconditionError("schema bounds must be positive");
  std::vector<Word> universe;
  for (std::uint64_t r = 1;; ++r) {
    Word w = alphabet.universe_word(r);
    if (w.size() > schema.max_len) break;
    universe.push_back(std::move(w));
  }
  std::vector<Language> members;
  for (std::size_t k = 1; k <= schema.max_words; ++k) {
    for_each_combination(universe.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::vector<Word> words;
      for (const auto i : idx) words.push_back(universe[i]);
      members.push_back(Language::finite(alphabet, std::move(words)));
      return true;
    });
  }
  for (auto& e : extras) {
    if (!(e.alphabet() == alphabet)) throw PreconditionError("family extra over a different alphabet");
    members.push_back(std::move(e));
  }
  return Family(std::move(members), schema);
}

std::optional<std::size_t> Family::index_of(const Language& language) const {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (equals(members_[i], language)) return i;
  }
  return std::nullopt;
}

MemberVerdict find_telltale(const Language& language, const Family& family, const TelltaleBounds& bounds) {
  const auto self = family.index_of(language);
  if (!self) throw PreconditionError("language " + language.describe() + " is not a family member");
  if (bounds.max_subset_size == 0 || bounds.max_word_len == 0) throw PreconditionError("tell-tale bounds must be positive");

  MemberVerdict out;
  out.member = *self;
  const std::vector<Word> pool = enumerate(language, SIZE_MAX, bounds.max_word_len);
  const Alphabet& alphabet = language.alphabet();

  // Members that are proper subsets of L are the only possible blockers.
  std::vector<std::size_t> below;
  for (std::size_t i = 0; i < family.members().size(); ++i) {
    if (is_proper_subset(family.members()[i], language)) below.push_back(i);
  }

  bool every_candidate_is_proper_member = true;
  for (std::size_t k = 1; k <= bounds.max_subset_size && out.verdict != TelltaleVerdict::Witness; ++k) {
    for_each_combination(pool.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::vector<Word> d;
      for (const auto i : idx) d.push_back(pool[i]);
      ++out.candidates_searched;
      const Language as_language = Language::finite(alphabet, d);
      std::optional<std::size_t> blocker;
      for (const auto i : below) {
        if (is_subset(as_language, family.members()[i])) {
          blocker = i;
          break;
        }
      }
      if (!blocker) {
        out.verdict = TelltaleVerdict::Witness;
        out.witness = std::move(d);
        return false;
      }
      const auto as_member = family.index_of(as_language);
      if (!as_member || !is_proper_subset(family.members()[*as_member], language)) {
        every_candidate_is_proper_member = false;
      }
      out.blocked.push_back({std::move(d), *blocker});
      return true;
    });
  }
  if (out.verdict == TelltaleVerdict::Witness) return out;

  const auto& schema = family.finite_schema();
  const bool within_schema = schema && bounds.max_subset_size <= schema->max_words && bounds.max_word_len <= schema->max_len;
  if (within_schema && every_candidate_is_proper_member && out.candidates_searched > 0) {
    out.verdict = TelltaleVerdict::Refuted;
    out.note = "every candidate D is itself a family member properly contained in L";
  } else {
    out.verdict = TelltaleVerdict::Inconclusive;
    out.note = "search bounds exhausted without a witness";
  }
  return out;
}

bool verify_witness(const Language& language, const std::vector<Word>& witness, const Family& family) {
  if (witness.empty()) return false;
  const Language d = Language::finite(language.alphabet(), witness);
  if (!is_subset(d, language)) return false;
  for (const auto& m : family.members()) {
    if (is_subset(d, m) && is_proper_subset(m, language)) return false;
  }
  return true;
}

TelltaleReport check_family(const Family& family, std::optional<TelltaleBounds> bounds) {
  TelltaleReport report;
  if (bounds) {
    report.bounds = *bounds;
  } else if (const auto& s = family.finite_schema()) {
    report.bounds = {s->max_words, s->max_len};
  }
  bool refuted = false, inconclusive = false;
  for (const auto& m : family.members()) {
    MemberVerdict v = find_telltale(m, family, report.bounds);
    refuted |= v.verdict == TelltaleVerdict::Refuted;
    inconclusive |= v.verdict == TelltaleVerdict::Inconclusive;
    report.members.push_back(std::move(v));
  }
  report.verdict = refuted ? FamilyVerdict::NotLearnable
                           : (inconclusive ? FamilyVerdict::Unknown : FamilyVerdict::Learnable);
  return report;
}

std::string TelltaleReport::render(const Family& family) const {
  std::ostringstream out;
  out << "tell-tale search: " << family.members().size() << " members, max_subset_size=" << bounds.max_subset_size
      << ", max_word_len=" << bounds.max_word_len << '\n';
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& v = members[i];
    out << "member " << i << " " << family.members()[v.member].describe() << ": " << to_string(v.verdict);
    if (v.verdict == TelltaleVerdict::Witness) out << " D=" << join(v.witness);
    out << " (" << v.candidates_searched << " candidates)";
    if (!v.note.empty()) out << " - " << v.note;
    out << '\n';
    constexpr std::size_t kShown = 5;
    for (std::size_t b = 0; b < v.blocked.size() && b < kShown; ++b) {
      out << "  blocked D=" << join(v.blocked[b].candidate) << " by member " << v.blocked[b].blocker << " "
          << family.members()[v.blocked[b].blocker].describe() << '\n';
    }
    if (v.blocked.size() > kShown) out << "  ... " << v.blocked.size() - kShown << " more blocked candidates\n";
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& v = members[i];
    out << "MEMBER " << i << ' ' << to_string(v.verdict);
    if (v.verdict == TelltaleVerdict::Witness) out << ' ' << join(v.witness);
    if (v.verdict == TelltaleVerdict::Refuted) out << " blocked=" << v.blocked.size();
    out << '\n';
  }
  out << "FAMILY " << to_string(verdict) << " (within search bounds)\n";
  return out.str();
}

std::vector<Language> enumeration_order(std::vector<Language> members) {
  std::stable_sort(members.begin(), members.end(), [](const Language& a, const Language& b) {
    const Cardinality ca = a.cardinality(), cb = b.cardinality();
    if (ca.infinite != cb.infinite) return cb.infinite;
    if (!ca.infinite && ca.count != cb.count) return ca.count < cb.count;
    const auto w = first_difference(a, b);
    return w && a.contains(*w);
  });
  return members;
}

std::size_t stabilization_horizon(const Family& family, const TelltaleReport& report) {
  std::size_t largest_finite = 0, largest_witness = 0;
  for (const auto& m : family.members()) {
    if (m.is_finite()) largest_finite = std::max<std::size_t>(largest_finite, m.cardinality().count);
  }
  for (const auto& v : report.members) largest_witness = std::max(largest_witness, v.witness.size());
  return 4 * (largest_finite + largest_witness);
}

}  // namespace limitlab
