#include "foldsys/regular.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <utility>

#include "foldsys/errors.hpp"

namespace foldsys {

namespace {

const char* kind_name(RegexNode::Kind k) {
  switch (k) {
    case RegexNode::Kind::Empty: return "Empty";
    case RegexNode::Kind::Epsilon: return "Epsilon";
    case RegexNode::Kind::Literal: return "Literal";
    case RegexNode::Kind::Concat: return "Concat";
    case RegexNode::Kind::Union: return "Union";
    case RegexNode::Kind::Star: return "Star";
    case RegexNode::Kind::Plus: return "Plus";
    case RegexNode::Kind::Optional: return "Optional";
  }
  return "?";
}

class RegexParser {
 public:
  RegexParser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  RegexNode parse() {
    skip_space();
    if (at_end()) throw ParseError("empty regular expression", 0);
    RegexNode node = parse_union();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return node;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  RegexNode parse_union() {
    std::vector<RegexNode> alternatives;
    alternatives.push_back(parse_concat());
    while (!at_end() && peek() == '|') {
      ++pos_;
      skip_space();
      alternatives.push_back(parse_concat());
    }
    if (alternatives.size() == 1) return std::move(alternatives.front());
    return {RegexNode::Kind::Union, 0, std::move(alternatives)};
  }

  RegexNode parse_concat() {
    std::vector<RegexNode> items;
    while (!at_end() && peek() != '|' && peek() != ')') items.push_back(parse_repeat());
    if (items.empty()) throw ParseError("empty alternative (use () for the empty string)", pos_);
    if (items.size() == 1) return std::move(items.front());
    return {RegexNode::Kind::Concat, 0, std::move(items)};
  }

  RegexNode parse_repeat() {
    RegexNode node = parse_atom();
    skip_space();
    while (!at_end() && (peek() == '*' || peek() == '+' || peek() == '?')) {
      RegexNode::Kind kind = peek() == '*'   ? RegexNode::Kind::Star
                             : peek() == '+' ? RegexNode::Kind::Plus
                                             : RegexNode::Kind::Optional;
      ++pos_;
      skip_space();
      std::vector<RegexNode> child;
      child.push_back(std::move(node));
      node = RegexNode{kind, 0, std::move(child)};
    }
    return node;
  }

  RegexNode parse_atom() {
    const std::size_t start = pos_;
    char c = peek();
    if (c == '(') {
      ++pos_;
      skip_space();
      if (!at_end() && peek() == ')') {
        ++pos_;
        return {RegexNode::Kind::Epsilon, 0, {}};
      }
      RegexNode inner = parse_union();
      if (at_end() || peek() != ')') throw ParseError("unbalanced '('", start);
      ++pos_;
      return inner;
    }
    if (c == '[') {
      ++pos_;
      skip_space();
      if (at_end() || peek() != ']') throw ParseError("'[' must be followed by ']' (empty language)", start);
      ++pos_;
      return {RegexNode::Kind::Empty, 0, {}};
    }
    if (c == '*' || c == '+' || c == '?') throw ParseError(std::string("dangling '") + c + "'", start);
    if (c == ']') throw ParseError("unexpected ']'", start);
    if (!alphabet_.contains(c))
      throw ParseError(std::string("unknown symbol '") + c + "' (alphabet {" + alphabet_.symbols() + "})", start);
    ++pos_;
    skip_space();
    return {RegexNode::Kind::Literal, c, {}};
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

// Thompson automaton with epsilon moves.
struct Nfa {
  struct Node {
    std::vector<std::uint32_t> eps;
    std::vector<std::pair<std::size_t, std::uint32_t>> moves;  // (symbol index, target)
  };
  std::vector<Node> nodes;

  std::uint32_t add() {
    nodes.emplace_back();
    return static_cast<std::uint32_t>(nodes.size() - 1);
  }
};

struct Fragment {
  std::uint32_t in, out;
};

Fragment build(Nfa& nfa, const RegexNode& node, const Alphabet& alphabet) {
  using K = RegexNode::Kind;
  switch (node.kind) {
    case K::Empty: {
      return {nfa.add(), nfa.add()};
    }
    case K::Epsilon: {
      auto s = nfa.add();
      return {s, s};
    }
    case K::Literal: {
      auto s = nfa.add(), t = nfa.add();
      nfa.nodes[s].moves.emplace_back(alphabet.index_of(node.symbol), t);
      return {s, t};
    }
    case K::Concat: {
      Fragment whole = build(nfa, node.children.front(), alphabet);
      for (std::size_t i = 1; i < node.children.size(); ++i) {
        Fragment next = build(nfa, node.children[i], alphabet);
        nfa.nodes[whole.out].eps.push_back(next.in);
        whole.out = next.out;
      }
      return whole;
    }
    case K::Union: {
      auto s = nfa.add(), t = nfa.add();
      for (const auto& child : node.children) {
        Fragment f = build(nfa, child, alphabet);
        nfa.nodes[s].eps.push_back(f.in);
        nfa.nodes[f.out].eps.push_back(t);
      }
      return {s, t};
    }
    case K::Star:
    case K::Plus:
    case K::Optional: {
      auto s = nfa.add(), t = nfa.add();
      Fragment f = build(nfa, node.children.front(), alphabet);
      nfa.nodes[s].eps.push_back(f.in);
      nfa.nodes[f.out].eps.push_back(t);
      if (node.kind != K::Plus) nfa.nodes[s].eps.push_back(t);
      if (node.kind != K::Optional) nfa.nodes[f.out].eps.push_back(f.in);
      return {s, t};
    }
  }
  throw Error("unreachable regex node kind");
}

std::vector<std::uint32_t> closure(const Nfa& nfa, std::vector<std::uint32_t> set) {
  std::vector<bool> seen(nfa.nodes.size(), false);
  std::vector<std::uint32_t> stack = set;
  for (auto s : set) seen[s] = true;
  while (!stack.empty()) {
    auto s = stack.back();
    stack.pop_back();
    for (auto t : nfa.nodes[s].eps) {
      if (!seen[t]) {
        seen[t] = true;
        set.push_back(t);
        stack.push_back(t);
      }
    }
  }
  std::sort(set.begin(), set.end());
  return set;
}

// Moore refinement followed by breadth-first renumbering from the start state.
Automaton minimize(const Alphabet& alphabet, const std::vector<std::uint32_t>& delta, const std::vector<bool>& accepting) {
  const std::size_t n = accepting.size(), k = alphabet.size();
  std::vector<std::uint32_t> block(n);
  for (std::size_t q = 0; q < n; ++q) block[q] = accepting[q] ? 1 : 0;
  std::size_t block_count = 0;
  while (true) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    std::vector<std::uint32_t> refined(n);
    for (std::size_t q = 0; q < n; ++q) {
      std::vector<std::uint32_t> signature{block[q]};
      for (std::size_t a = 0; a < k; ++a) signature.push_back(block[delta[q * k + a]]);
      auto [it, inserted] = ids.emplace(std::move(signature), static_cast<std::uint32_t>(ids.size()));
      refined[q] = it->second;
    }
    block.swap(refined);
    if (ids.size() == block_count) break;
    block_count = ids.size();
  }

  std::vector<std::int64_t> order(block_count, -1);
  std::vector<std::uint32_t> representative;
  std::queue<std::uint32_t> frontier;
  order[block[0]] = 0;
  representative.push_back(0);
  frontier.push(0);
  while (!frontier.empty()) {
    auto q = frontier.front();
    frontier.pop();
    for (std::size_t a = 0; a < k; ++a) {
      auto t = delta[q * k + a];
      if (order[block[t]] < 0) {
        order[block[t]] = static_cast<std::int64_t>(representative.size());
        representative.push_back(t);
        frontier.push(t);
      }
    }
  }
  std::vector<std::uint32_t> transitions(representative.size() * k);
  std::vector<bool> final_states(representative.size());
  for (std::size_t i = 0; i < representative.size(); ++i) {
    auto q = representative[i];
    final_states[i] = accepting[q];
    for (std::size_t a = 0; a < k; ++a)
      transitions[i * k + a] = static_cast<std::uint32_t>(order[block[delta[q * k + a]]]);
  }
  return Automaton(alphabet, std::move(transitions), std::move(final_states));
}

// reach[len][q]: some accepted string of exactly `len` symbols starts at q.
std::vector<std::vector<bool>> reach_table(const Automaton& a, std::size_t max_len) {
  const std::size_t n = a.state_count(), k = a.alphabet().size();
  std::vector<std::vector<bool>> reach(max_len + 1, std::vector<bool>(n, false));
  for (std::size_t q = 0; q < n; ++q) reach[0][q] = a.accepting(static_cast<Automaton::State>(q));
  for (std::size_t len = 1; len <= max_len; ++len)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t s = 0; s < k && !reach[len][q]; ++s)
        reach[len][q] = reach[len - 1][a.next(static_cast<Automaton::State>(q), s)];
  return reach;
}

}  // namespace

std::string to_string(const RegexNode& node) {
  switch (node.kind) {
    case RegexNode::Kind::Empty: return "Empty";
    case RegexNode::Kind::Epsilon: return "Epsilon";
    case RegexNode::Kind::Literal: return std::string(1, node.symbol);
    default: break;
  }
  std::string out = kind_name(node.kind);
  out += '(';
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i) out += ',';
    out += to_string(node.children[i]);
  }
  out += ')';
  return out;
}

RegexNode parse_regex(std::string_view text, const Alphabet& alphabet) { return RegexParser(text, alphabet).parse(); }

Automaton::Automaton(Alphabet alphabet, std::vector<State> transitions, std::vector<bool> accepting)
    : alphabet_(std::move(alphabet)), transitions_(std::move(transitions)), accepting_(std::move(accepting)) {
  if (accepting_.empty()) throw Error("automaton needs at least one state");
  if (transitions_.size() != accepting_.size() * alphabet_.size()) throw Error("automaton transition table is not complete");
  for (auto t : transitions_)
    if (t >= accepting_.size()) throw Error("automaton transition leaves the state set");
}

std::optional<std::vector<Automaton::State>> Automaton::run(std::string_view w) const {
  std::vector<State> states{start()};
  states.reserve(w.size() + 1);
  for (char c : w) {
    auto pos = alphabet_.symbols().find(c);
    if (pos == std::string::npos) return std::nullopt;
    states.push_back(next(states.back(), pos));
  }
  return states;
}

bool Automaton::is_infinite() const {
  const std::size_t n = state_count(), k = alphabet_.size();
  std::vector<bool> reachable(n, false), live(n, false);
  std::vector<State> stack{start()};
  reachable[start()] = true;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (std::size_t a = 0; a < k; ++a) {
      State t = next(q, a);
      if (!reachable[t]) {
        reachable[t] = true;
        stack.push_back(t);
      }
    }
  }
  for (std::size_t q = 0; q < n; ++q) live[q] = accepting_[q];
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t q = 0; q < n; ++q) {
      if (live[q]) continue;
      for (std::size_t a = 0; a < k; ++a)
        if (live[next(static_cast<State>(q), a)]) {
          live[q] = true;
          changed = true;
          break;
        }
    }
  }
  // A cycle through useful states exists iff the useful subgraph is not a DAG.
  std::vector<int> color(n, 0);
  auto useful = [&](State q) { return reachable[q] && live[q]; };
  for (std::size_t root = 0; root < n; ++root) {
    if (!useful(static_cast<State>(root)) || color[root]) continue;
    std::vector<std::pair<State, std::size_t>> dfs{{static_cast<State>(root), 0}};
    color[root] = 1;
    while (!dfs.empty()) {
      auto& [q, a] = dfs.back();
      if (a == k) {
        color[q] = 2;
        dfs.pop_back();
        continue;
      }
      State t = next(q, a++);
      if (!useful(t)) continue;
      if (color[t] == 1) return true;
      if (color[t] == 0) {
        color[t] = 1;
        dfs.emplace_back(t, 0);
      }
    }
  }
  return false;
}

Automaton compile(const RegexNode& ast, const Alphabet& alphabet) {
  Nfa nfa;
  Fragment whole = build(nfa, ast, alphabet);
  const std::size_t k = alphabet.size();

  std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
  std::vector<std::vector<std::uint32_t>> sets;
  std::vector<std::uint32_t> delta;
  auto intern = [&](std::vector<std::uint32_t> set) {
    auto [it, inserted] = ids.emplace(set, static_cast<std::uint32_t>(sets.size()));
    if (inserted) sets.push_back(std::move(set));
    return it->second;
  };
  intern(closure(nfa, {whole.in}));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      std::vector<std::uint32_t> target;
      for (auto s : sets[i])
        for (auto [sym, t] : nfa.nodes[s].moves)
          if (sym == a) target.push_back(t);
      std::sort(target.begin(), target.end());
      target.erase(std::unique(target.begin(), target.end()), target.end());
      // the empty set doubles as the sink state
      delta.push_back(intern(closure(nfa, std::move(target))));
    }
  }
  std::vector<bool> accepting(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i)
    accepting[i] = std::binary_search(sets[i].begin(), sets[i].end(), whole.out);
  return minimize(alphabet, delta, accepting);
}

bool member(const Automaton& automaton, std::string_view w) {
  auto states = automaton.run(w);
  return states && automaton.accepting(states->back());
}

std::vector<std::string> enumerate_length(const Automaton& automaton, std::size_t n, std::size_t limit) {
  const auto reach = reach_table(automaton, n);
  const auto& sigma = automaton.alphabet();
  std::vector<std::string> out;
  if (!reach[n][automaton.start()]) return out;

  // Depth-first in alphabet order; only productive prefixes are extended.
  std::string prefix;
  std::vector<std::pair<Automaton::State, std::size_t>> stack{{automaton.start(), 0}};
  while (!stack.empty()) {
    auto& [q, a] = stack.back();
    const std::size_t depth = stack.size() - 1;
    if (depth == n) {
      out.push_back(prefix);
      if (out.size() > limit)
        throw ResourceLimitExceeded("regular enumeration at length " + std::to_string(n) + " exceeds " +
                                    std::to_string(limit) + " strings");
      stack.pop_back();
      if (!prefix.empty()) prefix.pop_back();
      continue;
    }
    if (a == sigma.size()) {
      stack.pop_back();
      if (!prefix.empty()) prefix.pop_back();
      continue;
    }
    const std::size_t symbol = a++;
    Automaton::State t = automaton.next(q, symbol);
    if (!reach[n - depth - 1][t]) continue;
    prefix.push_back(sigma[symbol]);
    stack.emplace_back(t, 0);
  }
  return out;
}

std::optional<std::string> smallest_of_length(const Automaton& automaton, std::size_t n) {
  const auto reach = reach_table(automaton, n);
  if (!reach[n][automaton.start()]) return std::nullopt;
  std::string out;
  Automaton::State q = automaton.start();
  for (std::size_t depth = 0; depth < n; ++depth) {
    for (std::size_t a = 0; a < automaton.alphabet().size(); ++a) {
      Automaton::State t = automaton.next(q, a);
      if (reach[n - depth - 1][t]) {
        out.push_back(automaton.alphabet()[a]);
        q = t;
        break;
      }
    }
  }
  return out;
}

std::vector<bool> length_profile(const Automaton& automaton, std::size_t max_len) {
  // Forward reachable-state sets; profile[n] asks whether one of them accepts.
  const std::size_t n = automaton.state_count(), k = automaton.alphabet().size();
  std::vector<bool> current(n, false), profile(max_len + 1, false);
  current[automaton.start()] = true;
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (std::size_t q = 0; q < n; ++q)
      if (current[q] && automaton.accepting(static_cast<Automaton::State>(q))) profile[len] = true;
    std::vector<bool> next(n, false);
    for (std::size_t q = 0; q < n; ++q)
      if (current[q])
        for (std::size_t a = 0; a < k; ++a) next[automaton.next(static_cast<Automaton::State>(q), a)] = true;
    current.swap(next);
  }
  return profile;
}

std::size_t pumping_length(const Automaton& automaton) { return automaton.state_count(); }

std::string RegDecomposition::pumped(std::size_t i) const {
  std::string out = x;
  for (std::size_t k = 0; k < i; ++k) out += y;
  return out + z;
}

RegDecomposition reg_decompose(const Automaton& automaton, std::string_view w) {
  const std::size_t p = pumping_length(automaton);
  if (w.size() < p)
    throw PreconditionError("string of length " + std::to_string(w.size()) + " is shorter than the pumping length " +
                            std::to_string(p));
  auto states = automaton.run(w);
  if (!states || !automaton.accepting(states->back())) throw PreconditionError("string is not in the language");
  std::vector<std::int64_t> first_seen(automaton.state_count(), -1);
  for (std::size_t t = 0; t < states->size(); ++t) {
    auto q = (*states)[t];
    if (first_seen[q] >= 0) {
      const auto s = static_cast<std::size_t>(first_seen[q]);
      return {std::string(w.substr(0, s)), std::string(w.substr(s, t - s)), std::string(w.substr(t))};
    }
    first_seen[q] = static_cast<std::int64_t>(t);
  }
  throw Error("no repeated state along an accepted run of length >= state count");
}

RegularLang::RegularLang(Alphabet alphabet, std::string_view regex)
    : source_(regex), ast_(parse_regex(regex, alphabet)), automaton_(compile(ast_, alphabet)) {}

}  // namespace foldsys
