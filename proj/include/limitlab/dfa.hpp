#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "limitlab/alphabet.hpp"

namespace limitlab {

/// Finite or countably infinite word count.
struct Cardinality {
  bool infinite = false;
  std::uint64_t count = 0;  // saturates at UINT64_MAX; meaningless when infinite

  static constexpr Cardinality finite(std::uint64_t n) { return {false, n}; }
  static constexpr Cardinality unbounded() { return {true, 0}; }

  bool is_zero() const noexcept { return !infinite && count == 0; }
  std::string to_string() const { return infinite ? "INFINITE" : std::to_string(count); }
  friend bool operator==(const Cardinality&, const Cardinality&) = default;
};

using State = std::uint32_t;

/// Complete deterministic automaton over symbol indices 0..num_symbols-1.
struct Dfa {
  std::size_t num_symbols = 0;
  std::vector<State> delta;    // delta[state * num_symbols + symbol]
  std::vector<char> accepting;
  State start = 0;

  std::size_t num_states() const noexcept { return accepting.size(); }
  State next(State s, std::size_t symbol) const noexcept { return delta[s * num_symbols + symbol]; }

  /// Throws ValidationError unless the table is total and in range.
  void validate() const;
};

/// Runs `dfa` on `w`; symbols are mapped through `alphabet`.
bool dfa_accepts(const Dfa& dfa, const Alphabet& alphabet, std::string_view w);

/// Compiles the restricted pattern notation (symbols, concatenation, `|`,
/// grouping, postfix `*` and `+`) to a minimal complete DFA.
/// Throws ValidationError on syntax errors and on foreign symbols.
Dfa compile_pattern(const Alphabet& alphabet, std::string_view pattern);

/// Prefix-tree automaton accepting exactly `words`, completed with a sink.
Dfa trie_dfa(const Alphabet& alphabet, std::span<const Word> words);

/// Reachable part of the synchronous product; a pair state accepts when
/// `accept(left_accepts, right_accepts)` holds.
Dfa product(const Dfa& left, const Dfa& right, const std::function<bool(bool, bool)>& accept);

/// Moore partition refinement over the reachable states.
Dfa minimize(const Dfa& dfa);

/// INFINITE iff a cycle lies on some start-to-accepting path; otherwise the
/// exact number of accepted words (path count over the trimmed DAG).
Cardinality dfa_cardinality(const Dfa& dfa);

}  // namespace limitlab
