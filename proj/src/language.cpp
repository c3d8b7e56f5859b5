#include "limitlab/language.hpp"

#include <algorithm>

#include "limitlab/errors.hpp"

namespace limitlab {

struct Language::Impl {
  Alphabet alphabet;
  LanguageKind kind;
  std::vector<Word> words;  // finite
  Dfa dfa;                  // regular
  Cardinality card;
  std::string description;
};

Language Language::finite(const Alphabet& alphabet, std::vector<Word> words) {
  for (const auto& w : words) alphabet.validate_word(w);
  std::sort(words.begin(), words.end(), ShortlexLess{&alphabet});
  words.erase(std::unique(words.begin(), words.end()), words.end());
  auto impl = std::make_shared<Impl>(Impl{alphabet, LanguageKind::Finite, std::move(words), {}, {}, {}});
  impl->card = Cardinality::finite(impl->words.size());
  return Language(std::move(impl));
}

Language Language::regular(const Alphabet& alphabet, Dfa dfa, std::string description) {
  if (dfa.num_symbols != alphabet.size()) {
    throw ValidationError("automaton symbol count does not match alphabet '" + alphabet.symbols() + "'");
  }
  dfa.validate();
  if (dfa.accepting[dfa.start]) {
    throw ValidationError("language " + (description.empty() ? std::string("automaton") : description) +
                          " accepts the empty word");
  }
  const Cardinality card = dfa_cardinality(dfa);
  return Language(std::make_shared<Impl>(
      Impl{alphabet, LanguageKind::Regular, {}, std::move(dfa), card, std::move(description)}));
}

Language Language::pattern(const Alphabet& alphabet, std::string_view pattern) {
  return regular(alphabet, compile_pattern(alphabet, pattern), std::string(pattern));
}

LanguageKind Language::kind() const noexcept { return impl_->kind; }
const Alphabet& Language::alphabet() const noexcept { return impl_->alphabet; }
Cardinality Language::cardinality() const noexcept { return impl_->card; }

const std::vector<Word>& Language::words() const {
  if (impl_->kind != LanguageKind::Finite) throw DomainError("words() on a regular language");
  return impl_->words;
}

const Dfa& Language::dfa() const {
  if (impl_->kind != LanguageKind::Regular) throw DomainError("dfa() on a finite-set language");
  return impl_->dfa;
}

bool Language::contains(std::string_view w) const {
  if (impl_->kind == LanguageKind::Finite) {
    return std::binary_search(impl_->words.begin(), impl_->words.end(), w, ShortlexLess{&impl_->alphabet});
  }
  return dfa_accepts(impl_->dfa, impl_->alphabet, w);
}

std::string Language::describe() const {
  if (impl_->kind == LanguageKind::Regular) {
    return impl_->description.empty() ? std::string("<automaton>") : impl_->description;
  }
  std::string out = "{";
  for (std::size_t i = 0; i < impl_->words.size(); ++i) {
    if (i) out += ',';
    out += impl_->words[i];
  }
  return out + "}";
}

Dfa to_dfa(const Language& language) {
  if (language.kind() == LanguageKind::Regular) return language.dfa();
  return trie_dfa(language.alphabet(), language.words());
}

namespace {

void require_same_alphabet(const Language& a, const Language& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw DomainError("alphabet mismatch: '" + a.alphabet().symbols() + "' vs '" + b.alphabet().symbols() + "'");
  }
}

}  // namespace

bool membership(const Language& language, std::string_view w) {
  language.alphabet().validate_word(w);
  return language.contains(w);
}

std::vector<Word> enumerate(const Language& language, std::size_t count, std::size_t max_len) {
  if (count == 0 || max_len == 0) throw PreconditionError("enumerate needs count >= 1 and max_len >= 1");
  std::vector<Word> out;
  if (language.kind() == LanguageKind::Finite) {
    for (const auto& w : language.words()) {
      if (out.size() == count || w.size() > max_len) break;
      out.push_back(w);
    }
    return out;
  }
  ShortlexEnumerator it(language, max_len);
  while (out.size() < count) {
    auto w = it.next();
    if (!w) break;
    out.push_back(std::move(*w));
  }
  return out;
}

std::optional<Word> nth_word(const Language& language, std::uint64_t k) {
  if (k == 0) throw PreconditionError("shortlex positions start at 1");
  const Cardinality card = language.cardinality();
  if (!card.infinite && k > card.count) return std::nullopt;
  if (language.kind() == LanguageKind::Finite) return language.words()[k - 1];

  // Unrank via path counts: counts[r][s] = accepted words of length r from s.
  const Dfa& dfa = language.dfa();
  const std::size_t n = dfa.num_states();
  auto sat_add = [](std::uint64_t a, std::uint64_t b) { return a > UINT64_MAX - b ? UINT64_MAX : a + b; };
  std::vector<std::vector<std::uint64_t>> counts;
  counts.emplace_back(n, 0);
  for (State s = 0; s < n; ++s) counts[0][s] = dfa.accepting[s] ? 1 : 0;
  auto extend = [&] {
    const auto& prev = counts.back();
    std::vector<std::uint64_t> cur(n, 0);
    for (State s = 0; s < n; ++s) {
      for (std::size_t sym = 0; sym < dfa.num_symbols; ++sym) cur[s] = sat_add(cur[s], prev[dfa.next(s, sym)]);
    }
    counts.push_back(std::move(cur));
  };
  std::uint64_t remaining = k;
  std::size_t len = 0;
  while (true) {
    ++len;
    extend();
    const std::uint64_t here = counts[len][dfa.start];
    if (remaining <= here) break;
    remaining -= here;
  }
  Word w;
  State s = dfa.start;
  for (std::size_t pos = 0; pos < len; ++pos) {
    const std::size_t rest = len - pos - 1;
    for (std::size_t sym = 0; sym < dfa.num_symbols; ++sym) {
      const State t = dfa.next(s, sym);
      const std::uint64_t c = counts[rest][t];
      if (remaining <= c) {
        w += language.alphabet().symbol(sym);
        s = t;
        break;
      }
      remaining -= c;
    }
  }
  return w;
}

Cardinality cardinality(const Language& language) { return language.cardinality(); }

namespace {

std::vector<Word> sorted_intersection(const Language& a, const Language& b) {
  std::vector<Word> out;
  std::set_intersection(a.words().begin(), a.words().end(), b.words().begin(), b.words().end(),
                        std::back_inserter(out), ShortlexLess{&a.alphabet()});
  return out;
}

// True iff some reachable product state satisfies `bad`.
bool product_reaches(const Language& a, const Language& b, const std::function<bool(bool, bool)>& bad) {
  const Dfa p = product(to_dfa(a), to_dfa(b), bad);
  return std::any_of(p.accepting.begin(), p.accepting.end(), [](char c) { return c != 0; });
}

}  // namespace

bool equals(const Language& a, const Language& b) {
  require_same_alphabet(a, b);
  if (a.cardinality().infinite != b.cardinality().infinite) return false;
  if (!a.cardinality().infinite && a.cardinality().count != b.cardinality().count) return false;
  if (a.kind() == LanguageKind::Finite && b.kind() == LanguageKind::Finite) return a.words() == b.words();
  if (a.kind() == LanguageKind::Finite) {
    return std::all_of(a.words().begin(), a.words().end(), [&](const Word& w) { return b.contains(w); });
  }
  if (b.kind() == LanguageKind::Finite) {
    return std::all_of(b.words().begin(), b.words().end(), [&](const Word& w) { return a.contains(w); });
  }
  return !product_reaches(a, b, [](bool x, bool y) { return x != y; });
}

bool is_subset(const Language& a, const Language& b) {
  require_same_alphabet(a, b);
  if (a.cardinality().infinite && !b.cardinality().infinite) return false;
  if (a.kind() == LanguageKind::Finite) {
    return std::all_of(a.words().begin(), a.words().end(), [&](const Word& w) { return b.contains(w); });
  }
  return !product_reaches(a, b, [](bool x, bool y) { return x && !y; });
}

bool is_proper_subset(const Language& a, const Language& b) { return is_subset(a, b) && !equals(a, b); }

Cardinality intersection_cardinality(const Language& a, const Language& b) {
  require_same_alphabet(a, b);
  if (a.kind() == LanguageKind::Finite && b.kind() == LanguageKind::Finite) {
    return Cardinality::finite(sorted_intersection(a, b).size());
  }
  const Language* finite_side = a.kind() == LanguageKind::Finite ? &a : (b.kind() == LanguageKind::Finite ? &b : nullptr);
  if (finite_side) {
    const Language& other = finite_side == &a ? b : a;
    return Cardinality::finite(static_cast<std::uint64_t>(
        std::count_if(finite_side->words().begin(), finite_side->words().end(),
                      [&](const Word& w) { return other.contains(w); })));
  }
  return dfa_cardinality(product(a.dfa(), b.dfa(), [](bool x, bool y) { return x && y; }));
}

std::optional<Word> first_difference(const Language& a, const Language& b) {
  require_same_alphabet(a, b);
  Dfa diff = product(to_dfa(a), to_dfa(b), [](bool x, bool y) { return x != y; });
  return ShortlexEnumerator(a.alphabet(), std::move(diff)).next();
}

// ---------------------------------------------------------------------------

ShortlexEnumerator::ShortlexEnumerator(const Language& language, std::size_t max_len)
    : ShortlexEnumerator(language.alphabet(), to_dfa(language), max_len) {}

ShortlexEnumerator::ShortlexEnumerator(const Alphabet& alphabet, Dfa dfa, std::size_t max_len)
    : alphabet_(alphabet), dfa_(std::move(dfa)), max_len_(max_len) {
  if (dfa_.accepting[dfa_.start]) throw DomainError("enumerated automaton accepts the empty word");
  total_ = dfa_cardinality(dfa_);
  live_.emplace_back(dfa_.num_states(), 0);
  for (State s = 0; s < dfa_.num_states(); ++s) live_[0][s] = dfa_.accepting[s];
}

bool ShortlexEnumerator::live(std::size_t remaining, State s) {
  while (live_.size() <= remaining) {
    const auto& prev = live_.back();
    std::vector<char> cur(dfa_.num_states(), 0);
    for (State q = 0; q < dfa_.num_states(); ++q) {
      for (std::size_t sym = 0; sym < dfa_.num_symbols && !cur[q]; ++sym) cur[q] = prev[dfa_.next(q, sym)];
    }
    live_.push_back(std::move(cur));
  }
  return live_[remaining][s] != 0;
}

// Completes a lexicographically least path from `depth` down to len_.
bool ShortlexEnumerator::descend(std::size_t depth) {
  for (std::size_t d = depth; d < len_; ++d) {
    bool found = false;
    for (std::size_t sym = 0; sym < dfa_.num_symbols; ++sym) {
      const State t = dfa_.next(states_[d], sym);
      if (live(len_ - d - 1, t)) {
        syms_[d] = sym;
        states_[d + 1] = t;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool ShortlexEnumerator::start_length() {
  states_.assign(len_ + 1, dfa_.start);
  syms_.assign(len_, 0);
  return live(len_, dfa_.start) && descend(0);
}

std::optional<Word> ShortlexEnumerator::next() {
  if (!total_.infinite && produced_ >= total_.count) return std::nullopt;
  bool have = false;
  if (in_length_) {
    // Advance to the lexicographic successor within the current length.
    for (std::size_t d = len_; d-- > 0 && !have;) {
      for (std::size_t sym = syms_[d] + 1; sym < dfa_.num_symbols; ++sym) {
        const State t = dfa_.next(states_[d], sym);
        if (live(len_ - d - 1, t)) {
          syms_[d] = sym;
          states_[d + 1] = t;
          have = descend(d + 1);
          break;
        }
      }
    }
  }
  while (!have) {
    if (len_ >= max_len_) return std::nullopt;
    ++len_;
    have = start_length();
  }
  in_length_ = true;
  ++produced_;
  Word w;
  w.reserve(len_);
  for (std::size_t d = 0; d < len_; ++d) w += alphabet_.symbol(syms_[d]);
  return w;
}

}  // namespace limitlab
