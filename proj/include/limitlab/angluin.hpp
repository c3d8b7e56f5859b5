#pragma once

#include <optional>
#include <string>
#include <vector>

#include "limitlab/language.hpp"

namespace limitlab {

/// Bounded stand-in for "all finite languages": every non-empty set of at
/// most `max_words` words of length at most `max_len`.
struct FiniteSchema {
  std::size_t max_words = 0;
  std::size_t max_len = 0;
};

/// A concrete language family. Schema expansions come first, in order of
/// set size and then shortlex order of the member words; extras follow.
class Family {
 public:
  static Family explicit_members(std::vector<Language> members);
  static Family schema(const Alphabet& alphabet, FiniteSchema schema, std::vector<Language> extras = {});

  const std::vector<Language>& members() const noexcept { return members_; }
  const std::optional<FiniteSchema>& finite_schema() const noexcept { return schema_; }
  const Alphabet& alphabet() const { return members_.front().alphabet(); }

  /// Index of a member equal to `language`, if any.
  std::optional<std::size_t> index_of(const Language& language) const;

 private:
  Family(std::vector<Language> members, std::optional<FiniteSchema> schema);
  std::vector<Language> members_;
  std::optional<FiniteSchema> schema_;
};

enum class TelltaleVerdict { Witness, Refuted, Inconclusive };

std::string to_string(TelltaleVerdict verdict);

/// A candidate D together with the member L' ⊇ D, L' ⊊ L that rules it out.
struct BlockedCandidate {
  std::vector<Word> candidate;
  std::size_t blocker = 0;
};

struct MemberVerdict {
  std::size_t member = 0;
  TelltaleVerdict verdict = TelltaleVerdict::Inconclusive;
  std::vector<Word> witness;              // D_L for WITNESS
  std::vector<BlockedCandidate> blocked;  // every rejected candidate, in search order
  std::size_t candidates_searched = 0;
  std::string note;
};

struct TelltaleBounds {
  std::size_t max_subset_size = 4;
  std::size_t max_word_len = 6;
};

/// Searches finite D ⊆ L (|D| <= max_subset_size, words of length <=
/// max_word_len) such that no member L' ⊇ D is a proper subset of L. The
/// first hit in (size, shortlex) order is the witness. REFUTED is only
/// reported for schema families searched within the schema bounds, when
/// every candidate D is itself a member properly contained in L.
MemberVerdict find_telltale(const Language& language, const Family& family, const TelltaleBounds& bounds);

enum class FamilyVerdict { Learnable, NotLearnable, Unknown };

std::string to_string(FamilyVerdict verdict);

struct TelltaleReport {
  std::vector<MemberVerdict> members;
  FamilyVerdict verdict = FamilyVerdict::Unknown;
  TelltaleBounds bounds;

  /// Human-readable text followed by "MEMBER <idx> ..." lines and a
  /// "FAMILY <verdict>" line.
  std::string render(const Family& family) const;
};

/// Bounds default to the schema bounds when the family has a schema.
TelltaleReport check_family(const Family& family, std::optional<TelltaleBounds> bounds = std::nullopt);

/// Direct re-check of the tell-tale property against every member.
bool verify_witness(const Language& language, const std::vector<Word>& witness, const Family& family);

/// Non-decreasing cardinality with infinite languages last; ties broken by
/// which language holds the shortlex-least distinguishing word.
std::vector<Language> enumeration_order(std::vector<Language> members);

/// 4 × (largest finite member size + largest witness size).
std::size_t stabilization_horizon(const Family& family, const TelltaleReport& report);

}  // namespace limitlab
