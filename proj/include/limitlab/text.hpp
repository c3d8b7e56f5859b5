#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "limitlab/language.hpp"

namespace limitlab {

/// Finite, non-empty tuple of words over one alphabet; duplicates allowed.
class DataSet {
 public:
  DataSet(const Alphabet& alphabet, std::vector<Word> items);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Word>& items() const noexcept { return items_; }
  std::size_t length() const noexcept { return items_.size(); }
  const Word& operator[](std::size_t i) const { return items_[i]; }

  void push_back(Word w);

  std::string describe() const;

  friend bool operator==(const DataSet& a, const DataSet& b) {
    return a.alphabet_ == b.alphabet_ && a.items_ == b.items_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Word> items_;
};

/// The set of words occurring in `s`.
Language range(const DataSet& s);

/// r followed by s. Throws DomainError on alphabet mismatch.
DataSet concat(const DataSet& r, const DataSet& s);

/// range(s) is contained in `language`.
bool within(const DataSet& s, const Language& language);

enum class TextKind { Canonical, SeededRandom, LockingPrefix, AdversarialReplay };

std::string to_string(TextKind kind);

/// Infinite surjective presentation of a non-empty language. The generator
/// is a pure function of the 1-based index.
class Text {
 public:
  using Generator = std::function<Word(std::uint64_t)>;
  using Bound = std::function<std::uint64_t(std::uint64_t)>;

  Text(TextKind kind, Language source, Generator generator, Bound fairness_bound, std::string description);

  TextKind kind() const noexcept { return kind_; }
  const Language& source() const noexcept { return source_; }

  /// t(k), k >= 1.
  Word at(std::uint64_t k) const;
  /// t_n = (t(1), ..., t(n)).
  DataSet prefix(std::size_t n) const;

  /// Index by which the i-th shortlex word of the source has appeared.
  std::uint64_t fairness_bound(std::uint64_t i) const { return fairness_bound_(i); }

  const std::string& describe() const noexcept { return description_; }

 private:
  TextKind kind_;
  Language source_;
  Generator generator_;
  Bound fairness_bound_;
  std::string description_;
};

/// Shortlex enumeration; finite languages are cycled.
Text canonical_text(const Language& language);

/// Odd positions draw a word of shortlex rank <= k (capped at |L|) from the
/// SplitMix64 stream for `seed`; position 2i carries the i-th canonical word.
Text random_fair_text(const Language& language, std::uint64_t seed);

/// `prefix` verbatim, then the canonical text of `language`.
Text locking_prefix_text(const DataSet& prefix, const Language& language);

/// Same construction as locking_prefix_text, tagged as the completion of an
/// adversary's output.
Text replay_text(const DataSet& produced, const Language& language);

/// Cached shortlex word list shared by texts and chains over one language.
class CanonicalWords {
 public:
  explicit CanonicalWords(Language language);
  /// i-th (1-based) shortlex word; nullopt past the end of a finite language.
  std::optional<Word> get(std::uint64_t i) const;
  const Language& language() const noexcept { return language_; }

 private:
  struct State;
  Language language_;
  std::shared_ptr<State> state_;
};

}  // namespace limitlab
