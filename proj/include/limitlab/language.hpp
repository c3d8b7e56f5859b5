#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "limitlab/alphabet.hpp"
#include "limitlab/dfa.hpp"

namespace limitlab {

enum class LanguageKind { Finite, Regular };

/// Decidable language over a fixed finite alphabet: either an explicit
/// finite word set or a complete DFA. Immutable; copies share state.
class Language {
 public:
  /// Deduplicates and sorts `words` in shortlex order. Every word must be a
  /// non-empty word over `alphabet`.
  static Language finite(const Alphabet& alphabet, std::vector<Word> words);

  /// Throws ValidationError if the automaton is incomplete or accepts the
  /// empty word.
  static Language regular(const Alphabet& alphabet, Dfa dfa, std::string description = {});

  static Language pattern(const Alphabet& alphabet, std::string_view pattern);

  LanguageKind kind() const noexcept;
  const Alphabet& alphabet() const noexcept;

  /// Shortlex-sorted words; only for finite-set languages.
  const std::vector<Word>& words() const;
  /// Only for regular languages.
  const Dfa& dfa() const;

  /// Cached at construction.
  Cardinality cardinality() const noexcept;
  bool is_finite() const noexcept { return !cardinality().infinite; }

  /// Membership without alphabet checks; `w` must already be valid.
  bool contains(std::string_view w) const;

  /// Pattern source for pattern languages, "{w1,w2,...}" for finite sets.
  std::string describe() const;

 private:
  struct Impl;
  explicit Language(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Automaton for any language (trie for finite sets).
Dfa to_dfa(const Language& language);

// Decision procedures. All throw DomainError on alphabet mismatch.

bool membership(const Language& language, std::string_view w);

/// First min(count, |{w in L : |w| <= max_len}|) words of L in shortlex order.
std::vector<Word> enumerate(const Language& language, std::size_t count, std::size_t max_len);

/// The k-th (1-based) shortlex word of L, or nullopt when L has fewer words.
std::optional<Word> nth_word(const Language& language, std::uint64_t k);

Cardinality cardinality(const Language& language);
bool equals(const Language& a, const Language& b);
bool is_subset(const Language& a, const Language& b);
bool is_proper_subset(const Language& a, const Language& b);
Cardinality intersection_cardinality(const Language& a, const Language& b);

/// Shortlex-least word in the symmetric difference, if any.
std::optional<Word> first_difference(const Language& a, const Language& b);

/// Streams the words of a DFA language in shortlex order without
/// materializing whole length levels.
class ShortlexEnumerator {
 public:
  explicit ShortlexEnumerator(const Language& language, std::size_t max_len = SIZE_MAX);
  /// Convenience for enumerating an automaton that is not wrapped as a
  /// Language (e.g. a product); `dfa` may accept nothing.
  ShortlexEnumerator(const Alphabet& alphabet, Dfa dfa, std::size_t max_len = SIZE_MAX);

  std::optional<Word> next();

 private:
  bool live(std::size_t remaining, State s);
  bool descend(std::size_t depth);
  bool start_length();

  Alphabet alphabet_;
  Dfa dfa_;
  Cardinality total_;
  std::size_t max_len_;
  std::uint64_t produced_ = 0;
  std::size_t len_ = 0;
  bool in_length_ = false;
  std::vector<std::vector<char>> live_;  // live_[r][s]: accept reachable in exactly r steps
  std::vector<State> states_;            // states_[i]: state after i symbols
  std::vector<std::size_t> syms_;        // syms_[i]: symbol chosen at depth i
};

}  // namespace limitlab
