#include "limitlab/alphabet.hpp"

#include <algorithm>
#include <cmath>

#include "limitlab/errors.hpp"

namespace limitlab {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  index_.fill(-1);
  if (symbols_.empty()) throw ValidationError("alphabet must contain at least one symbol");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const char c = symbols_[i];
    if (std::string_view("()|*+").find(c) != std::string_view::npos) {
      throw ValidationError(std::string("alphabet symbol '") + c + "' is a pattern metacharacter");
    }
    auto& slot = index_[static_cast<unsigned char>(c)];
    if (slot >= 0) throw ValidationError(std::string("alphabet symbol '") + c + "' repeated");
    slot = static_cast<std::int16_t>(i);
  }
}

bool Alphabet::shortlex_less(std::string_view a, std::string_view b) const noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto x = index_[static_cast<unsigned char>(a[i])];
    const auto y = index_[static_cast<unsigned char>(b[i])];
    if (x != y) return x < y;
  }
  return false;
}

bool Alphabet::is_word(std::string_view w) const noexcept {
  return !w.empty() && std::all_of(w.begin(), w.end(), [this](char c) { return contains(c); });
}

void Alphabet::validate_word(std::string_view w) const {
  if (w.empty()) throw DomainError("the empty word is not in the universe");
  for (const char c : w) {
    if (!contains(c)) {
      throw DomainError("word '" + std::string(w) + "' uses symbol '" + c +
                        "' outside alphabet '" + symbols_ + "'");
    }
  }
}

long double Alphabet::universe_rank(std::string_view w) const {
  const auto k = static_cast<long double>(size());
  long double below = 0;  // words strictly shorter than w
  long double power = 1;
  for (std::size_t len = 1; len < w.size(); ++len) {
    power *= k;
    below += power;
  }
  long double lex = 0;
  for (const char c : w) lex = lex * k + static_cast<long double>(*index_of(c));
  return below + lex + 1;
}

Word Alphabet::universe_word(std::uint64_t k) const {
  if (k == 0) throw PreconditionError("universe ranks start at 1");
  const std::uint64_t base = size();
  std::uint64_t remaining = k - 1;
  std::size_t len = 1;
  std::uint64_t block = base;
  while (remaining >= block) {
    remaining -= block;
    ++len;
    block *= base;
  }
  Word w(len, symbols_[0]);
  for (std::size_t i = len; i-- > 0;) {
    w[i] = symbols_[remaining % base];
    remaining /= base;
  }
  return w;
}

}  // namespace limitlab
