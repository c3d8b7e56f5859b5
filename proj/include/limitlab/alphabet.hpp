#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace limitlab {

/// Words are plain strings of alphabet symbols. They are validated at every
/// language/data-set boundary; the empty word is never a valid Word.
using Word = std::string;

/// Ordered finite set of single-character symbols. The order fixes shortlex.
class Alphabet {
 public:
  /// Throws ValidationError on an empty or repeating symbol list, or on any
  /// of the pattern metacharacters `()|*+`.
  explicit Alphabet(std::string_view symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbols() const noexcept { return symbols_; }
  char symbol(std::size_t i) const { return symbols_.at(i); }

  std::optional<std::size_t> index_of(char c) const noexcept {
    const auto v = index_[static_cast<unsigned char>(c)];
    if (v < 0) return std::nullopt;
    return static_cast<std::size_t>(v);
  }
  bool contains(char c) const noexcept { return index_[static_cast<unsigned char>(c)] >= 0; }

  /// Length first, then symbol order.
  bool shortlex_less(std::string_view a, std::string_view b) const noexcept;

  /// Throws DomainError unless `w` is non-empty and over this alphabet.
  void validate_word(std::string_view w) const;
  bool is_word(std::string_view w) const noexcept;

  /// Position of `w` in the shortlex enumeration of all non-empty words
  /// (first word has rank 1). Long double because ranks grow as size^len.
  long double universe_rank(std::string_view w) const;

  /// The k-th (1-based) word of the universe in shortlex order.
  Word universe_word(std::uint64_t k) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::string symbols_;
  std::array<std::int16_t, 256> index_{};
};

struct ShortlexLess {
  const Alphabet* alphabet;
  bool operator()(std::string_view a, std::string_view b) const noexcept {
    return alphabet->shortlex_less(a, b);
  }
};

}  // namespace limitlab
