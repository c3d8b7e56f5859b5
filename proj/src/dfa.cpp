#include "limitlab/dfa.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <queue>
#include <set>

#include "limitlab/errors.hpp"

namespace limitlab {

void Dfa::validate() const {
  if (num_symbols == 0) throw ValidationError("automaton over an empty alphabet");
  if (accepting.empty()) throw ValidationError("automaton without states");
  if (delta.size() != accepting.size() * num_symbols) {
    throw ValidationError("transition table is not total");
  }
  if (start >= num_states()) throw ValidationError("start state out of range");
  for (const State s : delta) {
    if (s >= num_states()) throw ValidationError("transition target out of range");
  }
}

bool dfa_accepts(const Dfa& dfa, const Alphabet& alphabet, std::string_view w) {
  State s = dfa.start;
  for (const char c : w) s = dfa.next(s, *alphabet.index_of(c));
  return dfa.accepting[s] != 0;
}

// ---------------------------------------------------------------------------
// Pattern compilation: recursive descent to a Thompson NFA, then subset
// construction and minimization.

namespace {

constexpr int kEpsilon = -1;

struct Nfa {
  struct Edge {
    int symbol;  // kEpsilon or symbol index
    std::size_t to;
  };
  std::vector<std::vector<Edge>> edges;

  std::size_t add_state() {
    edges.emplace_back();
    return edges.size() - 1;
  }
  void connect(std::size_t from, int symbol, std::size_t to) { edges[from].push_back({symbol, to}); }
};

struct Fragment {
  std::size_t in;
  std::size_t out;
};

class PatternParser {
 public:
  PatternParser(const Alphabet& alphabet, std::string_view pattern)
      : alphabet_(alphabet), pattern_(pattern) {}

  Fragment parse(Nfa& nfa) {
    nfa_ = &nfa;
    if (pattern_.empty()) fail("empty pattern");
    Fragment f = alternation();
    if (pos_ != pattern_.size()) fail("unexpected '" + std::string(1, pattern_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("pattern '" + std::string(pattern_) + "' at offset " +
                          std::to_string(pos_) + ": " + what);
  }

  bool at_end() const { return pos_ >= pattern_.size(); }
  char peek() const { return pattern_[pos_]; }

  Fragment alternation() {
    std::vector<Fragment> branches{concatenation()};
    while (!at_end() && peek() == '|') {
      ++pos_;
      branches.push_back(concatenation());
    }
    if (branches.size() == 1) return branches.front();
    const std::size_t in = nfa_->add_state();
    const std::size_t out = nfa_->add_state();
    for (const auto& b : branches) {
      nfa_->connect(in, kEpsilon, b.in);
      nfa_->connect(b.out, kEpsilon, out);
    }
    return {in, out};
  }

  Fragment concatenation() {
    if (at_end() || peek() == '|' || peek() == ')') fail("empty alternative");
    Fragment f = repetition();
    while (!at_end() && peek() != '|' && peek() != ')') {
      const Fragment g = repetition();
      nfa_->connect(f.out, kEpsilon, g.in);
      f.out = g.out;
    }
    return f;
  }

  Fragment repetition() {
    Fragment f = atom();
    while (!at_end() && (peek() == '*' || peek() == '+')) {
      const bool star = peek() == '*';
      ++pos_;
      const std::size_t in = nfa_->add_state();
      const std::size_t out = nfa_->add_state();
      nfa_->connect(in, kEpsilon, f.in);
      nfa_->connect(f.out, kEpsilon, out);
      nfa_->connect(f.out, kEpsilon, f.in);
      if (star) nfa_->connect(in, kEpsilon, out);
      f = {in, out};
    }
    return f;
  }

  Fragment atom() {
    if (at_end()) fail("unexpected end");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Fragment f = alternation();
      if (at_end() || peek() != ')') fail("missing ')'");
      ++pos_;
      return f;
    }
    if (c == '*' || c == '+') fail("repetition without operand");
    const auto idx = alphabet_.index_of(c);
    if (!idx) fail("symbol '" + std::string(1, c) + "' not in alphabet '" + alphabet_.symbols() + "'");
    ++pos_;
    const std::size_t in = nfa_->add_state();
    const std::size_t out = nfa_->add_state();
    nfa_->connect(in, static_cast<int>(*idx), out);
    return {in, out};
  }

  const Alphabet& alphabet_;
  std::string_view pattern_;
  std::size_t pos_ = 0;
  Nfa* nfa_ = nullptr;
};

using StateSet = std::vector<std::size_t>;  // sorted

StateSet epsilon_closure(const Nfa& nfa, StateSet seeds) {
  std::vector<char> seen(nfa.edges.size(), 0);
  std::vector<std::size_t> stack;
  for (auto s : seeds) {
    if (!seen[s]) {
      seen[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const auto s = stack.back();
    stack.pop_back();
    for (const auto& e : nfa.edges[s]) {
      if (e.symbol == kEpsilon && !seen[e.to]) {
        seen[e.to] = 1;
        stack.push_back(e.to);
      }
    }
  }
  StateSet out;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) out.push_back(i);
  }
  return out;
}

}  // namespace

Dfa compile_pattern(const Alphabet& alphabet, std::string_view pattern) {
  Nfa nfa;
  const Fragment f = PatternParser(alphabet, pattern).parse(nfa);

  Dfa dfa;
  dfa.num_symbols = alphabet.size();
  std::map<StateSet, State> ids;
  std::vector<StateSet> sets;
  auto intern = [&](StateSet set) {
    auto [it, inserted] = ids.emplace(set, static_cast<State>(sets.size()));
    if (inserted) {
      const bool acc = std::binary_search(set.begin(), set.end(), f.out);
      sets.push_back(std::move(set));
      dfa.accepting.push_back(acc ? 1 : 0);
      dfa.delta.resize(dfa.accepting.size() * dfa.num_symbols, 0);
    }
    return it->second;
  };
  dfa.start = intern(epsilon_closure(nfa, {f.in}));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t sym = 0; sym < dfa.num_symbols; ++sym) {
      StateSet moved;
      for (const auto s : sets[i]) {
        for (const auto& e : nfa.edges[s]) {
          if (e.symbol == static_cast<int>(sym)) moved.push_back(e.to);
        }
      }
      std::sort(moved.begin(), moved.end());
      moved.erase(std::unique(moved.begin(), moved.end()), moved.end());
      // The empty set interns to the sink, which keeps the table total.
      const State target = intern(epsilon_closure(nfa, std::move(moved)));
      dfa.delta[i * dfa.num_symbols + sym] = target;
    }
  }
  return minimize(dfa);
}

Dfa trie_dfa(const Alphabet& alphabet, std::span<const Word> words) {
  Dfa dfa;
  dfa.num_symbols = alphabet.size();
  constexpr State kUnset = UINT32_MAX;
  auto add_state = [&] {
    dfa.accepting.push_back(0);
    dfa.delta.resize(dfa.accepting.size() * dfa.num_symbols, kUnset);
    return static_cast<State>(dfa.accepting.size() - 1);
  };
  const State sink = add_state();
  dfa.start = add_state();
  for (const auto& w : words) {
    State s = dfa.start;
    for (const char c : w) {
      const auto sym = *alphabet.index_of(c);
      if (dfa.delta[s * dfa.num_symbols + sym] == kUnset) {
        const State n = add_state();
        dfa.delta[s * dfa.num_symbols + sym] = n;
      }
      s = dfa.delta[s * dfa.num_symbols + sym];
    }
    dfa.accepting[s] = 1;
  }
  for (auto& t : dfa.delta) {
    if (t == kUnset) t = sink;
  }
  return dfa;
}

Dfa product(const Dfa& left, const Dfa& right, const std::function<bool(bool, bool)>& accept) {
  if (left.num_symbols != right.num_symbols) throw DomainError("product of automata over different alphabets");
  Dfa out;
  out.num_symbols = left.num_symbols;
  std::map<std::pair<State, State>, State> ids;
  std::vector<std::pair<State, State>> pairs;
  auto intern = [&](State a, State b) {
    auto [it, inserted] = ids.emplace(std::pair{a, b}, static_cast<State>(pairs.size()));
    if (inserted) {
      pairs.emplace_back(a, b);
      out.accepting.push_back(accept(left.accepting[a] != 0, right.accepting[b] != 0) ? 1 : 0);
      out.delta.resize(out.accepting.size() * out.num_symbols, 0);
    }
    return it->second;
  };
  out.start = intern(left.start, right.start);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t sym = 0; sym < out.num_symbols; ++sym) {
      const auto [a, b] = pairs[i];
      const State t = intern(left.next(a, sym), right.next(b, sym));
      out.delta[i * out.num_symbols + sym] = t;
    }
  }
  return out;
}

Dfa minimize(const Dfa& dfa) {
  // Restrict to reachable states first.
  std::vector<State> order;
  std::vector<int> reach(dfa.num_states(), -1);
  std::queue<State> q;
  reach[dfa.start] = 0;
  q.push(dfa.start);
  while (!q.empty()) {
    const State s = q.front();
    q.pop();
    reach[s] = static_cast<int>(order.size());
    order.push_back(s);
    for (std::size_t sym = 0; sym < dfa.num_symbols; ++sym) {
      const State t = dfa.next(s, sym);
      if (reach[t] < 0) {
        reach[t] = 0;
        q.push(t);
      }
    }
  }
  const std::size_t n = order.size();
  std::vector<std::size_t> block(n);
  for (std::size_t i = 0; i < n; ++i) block[i] = dfa.accepting[order[i]] ? 1 : 0;
  std::size_t num_blocks = 0;
  while (true) {
    // Signature: own block plus successor blocks.
    std::map<std::vector<std::size_t>, std::size_t> sig_ids;
    std::vector<std::size_t> next_block(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> sig{block[i]};
      for (std::size_t sym = 0; sym < dfa.num_symbols; ++sym) {
        sig.push_back(block[static_cast<std::size_t>(reach[dfa.next(order[i], sym)])]);
      }
      next_block[i] = sig_ids.emplace(std::move(sig), sig_ids.size()).first->second;
    }
    const std::size_t count = sig_ids.size();
    block = std::move(next_block);
    if (count == num_blocks) break;
    num_blocks = count;
  }
  // Renumber blocks in BFS order so equal languages get identical tables.
  std::vector<State> renumber(num_blocks, UINT32_MAX);
  State next_id = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (renumber[block[i]] == UINT32_MAX) renumber[block[i]] = next_id++;
  }
  Dfa out;
  out.num_symbols = dfa.num_symbols;
  out.accepting.assign(num_blocks, 0);
  out.delta.assign(num_blocks * dfa.num_symbols, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const State b = renumber[block[i]];
    out.accepting[b] = dfa.accepting[order[i]];
    for (std::size_t sym = 0; sym < dfa.num_symbols; ++sym) {
      out.delta[b * dfa.num_symbols + sym] =
          renumber[block[static_cast<std::size_t>(reach[dfa.next(order[i], sym)])]];
    }
  }
  out.start = renumber[block[0]];
  return out;
}

Cardinality dfa_cardinality(const Dfa& dfa) {
  const std::size_t n = dfa.num_states();
  // Forward reachability.
  std::vector<char> fwd(n, 0);
  std::vector<State> stack{dfa.start};
  fwd[dfa.start] = 1;
  while (!stack.empty()) {
    const State s = stack.back();
    stack.pop_back();
    for (std::size_t sym = 0; sym < dfa.num_symbols; ++sym) {
      const State t = dfa.next(s, sym);
      if (!fwd[t]) {
        fwd[t] = 1;
        stack.push_back(t);
      }
    }
  }
  // Backward reachability from accepting states.
  std::vector<std::vector<State>> preds(n);
  for (State s = 0; s < n; ++s) {
    for (std::size_t sym = 0; sym < dfa.num_symbols; ++sym) preds[dfa.next(s, sym)].push_back(s);
  }
  std::vector<char> bwd(n, 0);
  for (State s = 0; s < n; ++s) {
    if (dfa.accepting[s]) {
      bwd[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const State s = stack.back();
    stack.pop_back();
    for (const State p : preds[s]) {
      if (!bwd[p]) {
        bwd[p] = 1;
        stack.push_back(p);
      }
    }
  }
  auto useful = [&](State s) { return fwd[s] && bwd[s]; };
  if (!useful(dfa.start)) return Cardinality::finite(0);

  // DFS over useful states: a back edge means a pumpable cycle. Path counts
  // are accumulated in post-order (count[s] = accepting(s) + sum over succ).
  enum : char { kWhite, kGrey, kBlack };
  std::vector<char> colour(n, kWhite);
  std::vector<std::uint64_t> count(n, 0);
  auto sat_add = [](std::uint64_t a, std::uint64_t b) { return a > UINT64_MAX - b ? UINT64_MAX : a + b; };
  struct Frame {
    State s;
    std::size_t sym;
  };
  std::vector<Frame> frames{{dfa.start, 0}};
  colour[dfa.start] = kGrey;
  while (!frames.empty()) {
    auto& f = frames.back();
    if (f.sym == dfa.num_symbols) {
      // Words through s: the empty continuation (if accepting) plus successors.
      std::uint64_t c = 0;
      for (std::size_t sym = 0; sym < dfa.num_symbols; ++sym) {
        const State t = dfa.next(f.s, sym);
        if (useful(t)) c = sat_add(c, count[t]);
      }
      // The start state's own acceptance would be the empty word.
      if (dfa.accepting[f.s] && f.s != dfa.start) c = sat_add(c, 1);
      count[f.s] = c;
      colour[f.s] = kBlack;
      frames.pop_back();
      continue;
    }
    const State t = dfa.next(f.s, f.sym++);
    if (!useful(t)) continue;
    if (colour[t] == kGrey) return Cardinality::unbounded();
    if (colour[t] == kWhite) {
      colour[t] = kGrey;
      frames.push_back({t, 0});
    }
  }
  return Cardinality::finite(count[dfa.start]);
}

}  // namespace limitlab
