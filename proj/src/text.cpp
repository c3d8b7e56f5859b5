#include "limitlab/text.hpp"

#include <algorithm>
#include <cstdio>
#include <mutex>

#include "limitlab/errors.hpp"
#include "limitlab/rng.hpp"

namespace limitlab {

std::string rng_description() {
  char buf[160];
  std::snprintf(buf, sizeof buf, "splitmix64 gamma=0x%016llX mul1=0x%016llX mul2=0x%016llX",
                static_cast<unsigned long long>(kSplitMixGamma), static_cast<unsigned long long>(kSplitMixMul1),
                static_cast<unsigned long long>(kSplitMixMul2));
  return buf;
}

DataSet::DataSet(const Alphabet& alphabet, std::vector<Word> items) : alphabet_(alphabet), items_(std::move(items)) {
  if (items_.empty()) throw PreconditionError("a data set has length >= 1");
  for (const auto& w : items_) alphabet_.validate_word(w);
}

void DataSet::push_back(Word w) {
  alphabet_.validate_word(w);
  items_.push_back(std::move(w));
}

std::string DataSet::describe() const {
  std::string out = "(";
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) out += ',';
    out += items_[i];
  }
  return out + ")";
}

Language range(const DataSet& s) { return Language::finite(s.alphabet(), s.items()); }

DataSet concat(const DataSet& r, const DataSet& s) {
  if (!(r.alphabet() == s.alphabet())) throw DomainError("concatenating data sets over different alphabets");
  std::vector<Word> items = r.items();
  items.insert(items.end(), s.items().begin(), s.items().end());
  return DataSet(r.alphabet(), std::move(items));
}

bool within(const DataSet& s, const Language& language) {
  if (!(s.alphabet() == language.alphabet())) throw DomainError("data set and language over different alphabets");
  for (const auto& w : s.items()) {
    if (!language.contains(w)) return false;
  }
  return true;
}

std::string to_string(TextKind kind) {
  switch (kind) {
    case TextKind::Canonical: return "canonical";
    case TextKind::SeededRandom: return "seeded-random";
    case TextKind::LockingPrefix: return "locking-prefix";
    case TextKind::AdversarialReplay: return "adversarial-replay";
  }
  return "?";
}

// ---------------------------------------------------------------------------

struct CanonicalWords::State {
  explicit State(const Language& language) {
    if (language.kind() == LanguageKind::Regular) enumerator.emplace(language);
  }
  std::mutex mutex;
  std::optional<ShortlexEnumerator> enumerator;
  std::vector<Word> words;
  bool exhausted = false;
};

CanonicalWords::CanonicalWords(Language language)
    : language_(std::move(language)),
      state_(std::make_shared<State>(language_)) {}

std::optional<Word> CanonicalWords::get(std::uint64_t i) const {
  if (i == 0) throw PreconditionError("shortlex positions start at 1");
  if (language_.kind() == LanguageKind::Finite) {
    if (i > language_.words().size()) return std::nullopt;
    return language_.words()[i - 1];
  }
  std::lock_guard lock(state_->mutex);
  while (state_->words.size() < i && !state_->exhausted) {
    auto w = state_->enumerator->next();
    if (!w) {
      state_->exhausted = true;
      break;
    }
    state_->words.push_back(std::move(*w));
  }
  if (i > state_->words.size()) return std::nullopt;
  return state_->words[i - 1];
}

// ---------------------------------------------------------------------------

Text::Text(TextKind kind, Language source, Generator generator, Bound fairness_bound, std::string description)
    : kind_(kind),
      source_(std::move(source)),
      generator_(std::move(generator)),
      fairness_bound_(std::move(fairness_bound)),
      description_(std::move(description)) {}

Word Text::at(std::uint64_t k) const {
  if (k == 0) throw PreconditionError("text positions start at 1");
  return generator_(k);
}

DataSet Text::prefix(std::size_t n) const {
  if (n == 0) throw PreconditionError("a text prefix has length >= 1");
  std::vector<Word> items;
  items.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) items.push_back(generator_(k));
  return DataSet(source_.alphabet(), std::move(items));
}

namespace {

void require_nonempty(const Language& language) {
  if (language.cardinality().is_zero()) throw DomainError("no text exists for the empty language");
}

// k-th element of the canonical text: cyclic over a finite language.
Word canonical_at(const CanonicalWords& words, std::uint64_t k) {
  const Cardinality card = words.language().cardinality();
  const std::uint64_t i = card.infinite ? k : ((k - 1) % card.count) + 1;
  return *words.get(i);
}

}  // namespace

Text canonical_text(const Language& language) {
  require_nonempty(language);
  CanonicalWords words(language);
  return Text(
      TextKind::Canonical, language, [words](std::uint64_t k) { return canonical_at(words, k); },
      [](std::uint64_t i) { return i; }, "canonical");
}

Text random_fair_text(const Language& language, std::uint64_t seed) {
  require_nonempty(language);
  CanonicalWords words(language);
  auto gen = [words, seed](std::uint64_t k) -> Word {
    if (k % 2 == 0) return canonical_at(words, k / 2);
    const Cardinality card = words.language().cardinality();
    const std::uint64_t bound = card.infinite ? k : std::min<std::uint64_t>(k, card.count);
    return *words.get(1 + splitmix64_at(seed, k) % bound);
  };
  return Text(TextKind::SeededRandom, language, std::move(gen), [](std::uint64_t i) { return 2 * i; },
              "random seed=" + std::to_string(seed));
}

namespace {

Text prefixed_text(TextKind kind, const DataSet& prefix, const Language& language) {
  require_nonempty(language);
  if (!within(prefix, language)) {
    throw PreconditionError("prefix " + prefix.describe() + " is not contained in " + language.describe());
  }
  CanonicalWords words(language);
  const std::vector<Word> head = prefix.items();
  const std::uint64_t m = head.size();
  auto gen = [words, head, m](std::uint64_t k) -> Word {
    if (k <= m) return head[k - 1];
    return canonical_at(words, k - m);
  };
  return Text(kind, language, std::move(gen), [m](std::uint64_t i) { return m + i; },
              to_string(kind) + " prefix=" + prefix.describe());
}

}  // namespace

Text locking_prefix_text(const DataSet& prefix, const Language& language) {
  return prefixed_text(TextKind::LockingPrefix, prefix, language);
}

Text replay_text(const DataSet& produced, const Language& language) {
  return prefixed_text(TextKind::AdversarialReplay, produced, language);
}

}  // namespace limitlab
