#include "foldsys/cfg.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "foldsys/errors.hpp"
#include "foldsys/kernels.hpp"

namespace foldsys {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_ident_tail(char c) { return is_upper(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

struct RawAlternative {
  std::vector<std::pair<bool, std::string>> symbols;  // (is nonterminal, token)
  std::size_t position;
};

// Tokenises the right-hand side of one production group.
std::vector<RawAlternative> split_alternatives(std::string_view rhs, std::size_t offset, const Alphabet& terminals) {
  std::vector<RawAlternative> out(1);
  out.back().position = offset;
  bool saw_eps = false;
  std::size_t i = 0;
  auto finish = [&](std::size_t pos) {
    auto& alt = out.back();
    if (alt.symbols.empty() && !saw_eps) throw ParseError("empty alternative (write eps)", pos);
    if (saw_eps && !alt.symbols.empty()) throw ParseError("eps must stand alone in its alternative", pos);
  };
  while (i < rhs.size()) {
    char c = rhs[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    if (c == '|') {
      finish(offset + i);
      out.emplace_back();
      out.back().position = offset + i + 1;
      saw_eps = false;
      ++i;
      continue;
    }
    if (is_upper(c)) {
      std::size_t j = i + 1;
      while (j < rhs.size() && is_ident_tail(rhs[j])) ++j;
      out.back().symbols.emplace_back(true, std::string(rhs.substr(i, j - i)));
      i = j;
      continue;
    }
    if (rhs.substr(i, 3) == "eps" && (i + 3 == rhs.size() || is_space(rhs[i + 3]) || rhs[i + 3] == '|')) {
      if (saw_eps) throw ParseError("repeated eps", offset + i);
      saw_eps = true;
      i += 3;
      continue;
    }
    if (!terminals.contains(c))
      throw ParseError(std::string("undeclared terminal '") + c + "' (alphabet {" + terminals.symbols() + "})",
                       offset + i);
    out.back().symbols.emplace_back(false, std::string(1, c));
    ++i;
  }
  finish(offset + rhs.size());
  return out;
}

using Productions = std::vector<std::vector<Rhs>>;

void dedupe(std::vector<Rhs>& rules) {
  std::set<Rhs> seen;
  std::vector<Rhs> kept;
  for (auto& r : rules)
    if (seen.insert(r).second) kept.push_back(std::move(r));
  rules.swap(kept);
}

std::vector<bool> nullable_set(const Productions& prods) {
  std::vector<bool> nullable(prods.size(), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < prods.size(); ++a) {
      if (nullable[a]) continue;
      for (const auto& rhs : prods[a]) {
        bool all = std::all_of(rhs.begin(), rhs.end(),
                               [&](const GrammarSymbol& s) { return !s.terminal && nullable[s.nonterminal]; });
        if (all) {
          nullable[a] = true;
          changed = true;
          break;
        }
      }
    }
  }
  return nullable;
}

// Every way of dropping nullable occurrences from `rhs`; the empty result is omitted.
void expand_nullable(const Rhs& rhs, const std::vector<bool>& nullable, std::vector<Rhs>& out) {
  std::vector<Rhs> partial{{}};
  for (const auto& sym : rhs) {
    std::vector<Rhs> next;
    for (auto& p : partial) {
      if (!sym.terminal && nullable[sym.nonterminal]) next.push_back(p);
      p.push_back(sym);
      next.push_back(std::move(p));
    }
    partial.swap(next);
  }
  for (auto& p : partial)
    if (!p.empty()) out.push_back(std::move(p));
}

bool is_unit(const Rhs& rhs) { return rhs.size() == 1 && !rhs.front().terminal; }

}  // namespace

Grammar parse_grammar(std::string_view text, const Alphabet& terminals) {
  Grammar g{terminals, {}, {}, 0};
  std::map<std::string, std::size_t> index;
  struct Pending {
    std::size_t lhs;
    RawAlternative alt;
  };
  std::vector<Pending> pending;

  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t i = 0;
    while (i < line.size() && is_space(line[i])) ++i;
    if (i < line.size()) {
      if (!is_upper(line[i])) throw ParseError("production must start with an uppercase nonterminal", line_start + i);
      std::size_t j = i + 1;
      while (j < line.size() && is_ident_tail(line[j])) ++j;
      std::string lhs(line.substr(i, j - i));
      auto arrow = line.find("->", j);
      if (arrow == std::string_view::npos) throw ParseError("expected '->'", line_start + j);
      for (std::size_t k = j; k < arrow; ++k)
        if (!is_space(line[k])) throw ParseError("expected '->'", line_start + k);
      auto [it, inserted] = index.emplace(lhs, g.nonterminals.size());
      if (inserted) g.nonterminals.push_back(lhs);
      for (auto& alt : split_alternatives(line.substr(arrow + 2), line_start + arrow + 2, terminals))
        pending.push_back({it->second, std::move(alt)});
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  if (g.nonterminals.empty()) throw ParseError("grammar has no productions", 0);

  g.productions.resize(g.nonterminals.size());
  for (auto& [lhs, alt] : pending) {
    Rhs rhs;
    for (auto& [is_nt, token] : alt.symbols) {
      if (!is_nt) {
        rhs.push_back({true, token[0], 0});
        continue;
      }
      auto it = index.find(token);
      if (it == index.end()) throw ParseError("undeclared nonterminal '" + token + "'", alt.position);
      rhs.push_back({false, 0, it->second});
    }
    g.productions[lhs].push_back(std::move(rhs));
  }
  for (auto& rules : g.productions) dedupe(rules);
  return g;
}

NormalFormGrammar to_normal_form(const Grammar& grammar) {
  // START: fresh start symbol so the start never occurs on a right-hand side.
  std::vector<std::string> names = grammar.nonterminals;
  Productions prods = grammar.productions;
  std::string start_name = names[grammar.start] + "'";
  while (std::find(names.begin(), names.end(), start_name) != names.end()) start_name += "'";
  const std::size_t start = names.size();
  names.push_back(start_name);
  prods.push_back({Rhs{GrammarSymbol{false, 0, grammar.start}}});

  // DEL
  const auto nullable = nullable_set(prods);
  const bool accepts_empty = nullable[start];
  for (auto& rules : prods) {
    std::vector<Rhs> expanded;
    for (const auto& rhs : rules) expand_nullable(rhs, nullable, expanded);
    dedupe(expanded);
    rules.swap(expanded);
  }

  // UNIT
  const std::size_t count = prods.size();
  std::vector<std::vector<bool>> unit(count, std::vector<bool>(count, false));
  for (std::size_t a = 0; a < count; ++a) {
    std::vector<std::size_t> stack{a};
    unit[a][a] = true;
    while (!stack.empty()) {
      auto b = stack.back();
      stack.pop_back();
      for (const auto& rhs : prods[b])
        if (is_unit(rhs) && !unit[a][rhs.front().nonterminal]) {
          unit[a][rhs.front().nonterminal] = true;
          stack.push_back(rhs.front().nonterminal);
        }
    }
  }
  Productions no_units(count);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b)
      if (unit[a][b])
        for (const auto& rhs : prods[b])
          if (!is_unit(rhs)) no_units[a].push_back(rhs);
    dedupe(no_units[a]);
  }
  prods.swap(no_units);

  // Useless symbols: non-generating first, then unreachable.
  std::vector<bool> generating(count, false);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < count; ++a) {
      if (generating[a]) continue;
      for (const auto& rhs : prods[a])
        if (std::all_of(rhs.begin(), rhs.end(),
                        [&](const GrammarSymbol& s) { return s.terminal || generating[s.nonterminal]; })) {
          generating[a] = changed = true;
          break;
        }
    }
  }
  for (auto& rules : prods)
    std::erase_if(rules, [&](const Rhs& rhs) {
      return std::any_of(rhs.begin(), rhs.end(),
                         [&](const GrammarSymbol& s) { return !s.terminal && !generating[s.nonterminal]; });
    });
  std::vector<std::int64_t> renumber(count, -1);
  std::vector<std::size_t> order{start};
  renumber[start] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto& rhs : prods[order[i]])
      for (const auto& s : rhs)
        if (!s.terminal && renumber[s.nonterminal] < 0) {
          renumber[s.nonterminal] = static_cast<std::int64_t>(order.size());
          order.push_back(s.nonterminal);
        }

  // TERM + BIN
  NormalFormGrammar nf{grammar.terminals, {}, 0, accepts_empty, {}, {}};
  for (auto old : order) nf.names.push_back(names[old]);
  std::map<char, std::uint32_t> terminal_nt;
  std::map<std::vector<std::uint32_t>, std::uint32_t> tail_nt;
  auto fresh = [&](std::string name) {
    while (std::find(nf.names.begin(), nf.names.end(), name) != nf.names.end()) name += "'";
    nf.names.push_back(std::move(name));
    return static_cast<std::uint32_t>(nf.names.size() - 1);
  };
  auto term_of = [&](char c) {
    auto it = terminal_nt.find(c);
    if (it != terminal_nt.end()) return it->second;
    auto id = fresh(std::string("T_") + c);
    terminal_nt.emplace(c, id);
    nf.terminal.push_back({id, c});
    return id;
  };
  std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> pending_tails;
  auto tail_of = [&](std::vector<std::uint32_t> tail) {
    auto it = tail_nt.find(tail);
    if (it != tail_nt.end()) return it->second;
    auto id = fresh("N" + std::to_string(tail_nt.size() + 1));
    tail_nt.emplace(tail, id);
    pending_tails.emplace_back(id, std::move(tail));
    return id;
  };

  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto lhs = static_cast<std::uint32_t>(i);
    for (const auto& rhs : prods[order[i]]) {
      if (rhs.size() == 1) {  // only terminals remain after UNIT
        nf.terminal.push_back({lhs, rhs.front().symbol});
        continue;
      }
      std::vector<std::uint32_t> body;
      for (const auto& s : rhs)
        body.push_back(s.terminal ? term_of(s.symbol) : static_cast<std::uint32_t>(renumber[s.nonterminal]));
      std::uint32_t right =
          body.size() == 2 ? body[1] : tail_of(std::vector<std::uint32_t>(body.begin() + 1, body.end()));
      nf.binary.push_back({lhs, body[0], right});
    }
  }
  for (std::size_t i = 0; i < pending_tails.size(); ++i) {
    auto [id, tail] = pending_tails[i];
    std::uint32_t right = tail.size() == 2 ? tail[1] : tail_of(std::vector<std::uint32_t>(tail.begin() + 1, tail.end()));
    nf.binary.push_back({id, tail[0], right});
  }

  // stable dedupe of rules
  std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> seen_binary;
  std::erase_if(nf.binary, [&](const auto& r) { return !seen_binary.insert({r.lhs, r.left, r.right}).second; });
  std::set<std::pair<std::uint32_t, char>> seen_terminal;
  std::erase_if(nf.terminal, [&](const auto& r) { return !seen_terminal.insert({r.lhs, r.symbol}).second; });
  return nf;
}

bool cyk_member(const NormalFormGrammar& nf, std::string_view w) {
  if (w.empty()) return nf.accepts_empty;
  if (!nf.terminals.contains_all(w)) return false;
  auto table = kernels::cyk_fill_parallel(nf, w);
  return table.has(0, w.size(), nf.start);
}

std::vector<std::string> enumerate_length(const NormalFormGrammar& nf, std::size_t n, std::size_t limit) {
  if (n == 0) return nf.accepts_empty ? std::vector<std::string>{""} : std::vector<std::string>{};
  const std::size_t k = nf.nonterminal_count();
  // sets[len][A]: sorted strings of length len derived from A
  std::vector<std::vector<std::vector<std::string>>> sets(n + 1, std::vector<std::vector<std::string>>(k));
  for (const auto& r : nf.terminal) sets[1][r.lhs].emplace_back(1, r.symbol);
  for (std::size_t len = 1; len <= n; ++len) {
    if (len >= 2)
      for (const auto& r : nf.binary)
        for (std::size_t split = 1; split < len; ++split) {
          const auto& left = sets[split][r.left];
          const auto& right = sets[len - split][r.right];
          if (left.empty() || right.empty()) continue;
          auto& target = sets[len][r.lhs];
          for (const auto& a : left)
            for (const auto& b : right) target.push_back(a + b);
          if (target.size() > 2 * limit) {
            std::sort(target.begin(), target.end());
            target.erase(std::unique(target.begin(), target.end()), target.end());
            if (target.size() > limit)
              throw ResourceLimitExceeded("context-free enumeration at length " + std::to_string(len) + " exceeds " +
                                          std::to_string(limit) + " strings");
          }
        }
    for (auto& cell : sets[len]) {
      std::sort(cell.begin(), cell.end());
      cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
      if (cell.size() > limit)
        throw ResourceLimitExceeded("context-free enumeration at length " + std::to_string(len) + " exceeds " +
                                    std::to_string(limit) + " strings");
    }
  }
  return sets[n][nf.start];
}

namespace {

// nonempty[len][A]
std::vector<std::vector<bool>> nonempty_table(const NormalFormGrammar& nf, std::size_t max_len) {
  const std::size_t k = nf.nonterminal_count();
  std::vector<std::vector<bool>> table(max_len + 1, std::vector<bool>(k, false));
  if (max_len >= 1)
    for (const auto& r : nf.terminal) table[1][r.lhs] = true;
  for (std::size_t len = 2; len <= max_len; ++len)
    for (const auto& r : nf.binary) {
      if (table[len][r.lhs]) continue;
      for (std::size_t split = 1; split < len; ++split)
        if (table[split][r.left] && table[len - split][r.right]) {
          table[len][r.lhs] = true;
          break;
        }
    }
  return table;
}

class SmallestBuilder {
 public:
  SmallestBuilder(const NormalFormGrammar& nf, std::size_t n) : nf_(nf), nonempty_(nonempty_table(nf, n)) {}

  bool nonempty(std::uint32_t a, std::size_t len) const { return nonempty_[len][a]; }

  const std::string& smallest(std::uint32_t a, std::size_t len) {
    auto key = std::make_pair(a, len);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::string best;
    bool have = false;
    if (len == 1) {
      for (const auto& r : nf_.terminal)
        if (r.lhs == a && (!have || std::string(1, r.symbol) < best)) {
          best.assign(1, r.symbol);
          have = true;
        }
    } else {
      for (const auto& r : nf_.binary) {
        if (r.lhs != a) continue;
        for (std::size_t split = 1; split < len; ++split) {
          if (!nonempty_[split][r.left] || !nonempty_[len - split][r.right]) continue;
          std::string candidate = smallest(r.left, split) + smallest(r.right, len - split);
          if (!have || candidate < best) {
            best = std::move(candidate);
            have = true;
          }
        }
      }
    }
    return memo_.emplace(key, std::move(best)).first->second;
  }

 private:
  const NormalFormGrammar& nf_;
  std::vector<std::vector<bool>> nonempty_;
  std::map<std::pair<std::uint32_t, std::size_t>, std::string> memo_;
};

}  // namespace

std::optional<std::string> smallest_of_length(const NormalFormGrammar& nf, std::size_t n) {
  if (n == 0) return nf.accepts_empty ? std::optional<std::string>("") : std::nullopt;
  SmallestBuilder builder(nf, n);
  if (!builder.nonempty(nf.start, n)) return std::nullopt;
  return builder.smallest(nf.start, n);
}

std::vector<bool> length_profile(const NormalFormGrammar& nf, std::size_t max_len) {
  auto table = nonempty_table(nf, max_len);
  std::vector<bool> profile(max_len + 1, false);
  profile[0] = nf.accepts_empty;
  for (std::size_t len = 1; len <= max_len; ++len) profile[len] = table[len][nf.start];
  return profile;
}

bool is_infinite(const NormalFormGrammar& nf) {
  const std::size_t k = nf.nonterminal_count();
  std::vector<std::vector<std::uint32_t>> edges(k);
  for (const auto& r : nf.binary) {
    edges[r.lhs].push_back(r.left);
    edges[r.lhs].push_back(r.right);
  }
  std::vector<int> color(k, 0);
  for (std::uint32_t root = 0; root < k; ++root) {
    if (color[root]) continue;
    std::vector<std::pair<std::uint32_t, std::size_t>> dfs{{root, 0}};
    color[root] = 1;
    while (!dfs.empty()) {
      auto& [a, i] = dfs.back();
      if (i == edges[a].size()) {
        color[a] = 2;
        dfs.pop_back();
        continue;
      }
      auto b = edges[a][i++];
      if (color[b] == 1) return true;
      if (color[b] == 0) {
        color[b] = 1;
        dfs.emplace_back(b, 0);
      }
    }
  }
  return false;
}

std::size_t cfg_pumping_length(const NormalFormGrammar& nf) {
  const std::size_t exponent = nf.nonterminal_count() + 1;
  if (exponent >= std::numeric_limits<std::size_t>::digits) return std::numeric_limits<std::size_t>::max();
  return std::size_t{1} << exponent;
}

std::vector<ParseNode> parse_tree(const NormalFormGrammar& nf, std::string_view w) {
  if (w.empty() || !nf.terminals.contains_all(w)) throw PreconditionError("parse tree needs a non-empty member");
  auto table = kernels::cyk_fill_parallel(nf, w);
  if (!table.has(0, w.size(), nf.start)) throw PreconditionError("string is not in the language");

  std::vector<ParseNode> nodes{{nf.start, 0, w.size()}};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const ParseNode node = nodes[i];
    if (node.length == 1) continue;
    bool expanded = false;
    for (const auto& r : nf.binary) {
      if (r.lhs != node.nonterminal) continue;
      for (std::size_t split = 1; split < node.length && !expanded; ++split) {
        if (!table.has(node.begin, split, r.left) || !table.has(node.begin + split, node.length - split, r.right))
          continue;
        nodes[i].left = static_cast<std::int64_t>(nodes.size());
        nodes.push_back({r.left, node.begin, split});
        nodes[i].right = static_cast<std::int64_t>(nodes.size());
        nodes.push_back({r.right, node.begin + split, node.length - split});
        expanded = true;
      }
      if (expanded) break;
    }
    if (!expanded) throw Error("inconsistent CYK table while building parse tree");
  }
  return nodes;
}

std::string CfgDecomposition::pumped(std::size_t i) const {
  std::string out = u;
  for (std::size_t k = 0; k < i; ++k) out += v;
  out += x;
  for (std::size_t k = 0; k < i; ++k) out += y;
  return out + z;
}

CfgDecomposition cfg_decompose(const NormalFormGrammar& nf, std::string_view w) {
  const std::size_t p = cfg_pumping_length(nf);
  if (w.size() < p)
    throw PreconditionError("string of length " + std::to_string(w.size()) + " is shorter than the pumping length " +
                            std::to_string(p));
  const auto nodes = parse_tree(nf, w);

  // Children always have larger indices, so heights fill in reverse order.
  std::vector<std::size_t> height(nodes.size(), 0);
  for (std::size_t i = nodes.size(); i-- > 0;)
    if (nodes[i].left >= 0)
      height[i] = 1 + std::max(height[static_cast<std::size_t>(nodes[i].left)],
                               height[static_cast<std::size_t>(nodes[i].right)]);

  std::vector<std::size_t> path{0};
  while (nodes[path.back()].left >= 0) {
    const auto& n = nodes[path.back()];
    auto l = static_cast<std::size_t>(n.left), r = static_cast<std::size_t>(n.right);
    path.push_back(height[r] > height[l] ? r : l);
  }

  std::map<std::uint32_t, std::size_t> below;
  for (std::size_t i = path.size(); i-- > 0;) {
    const auto& upper = nodes[path[i]];
    auto it = below.find(upper.nonterminal);
    if (it == below.end()) {
      below.emplace(upper.nonterminal, path[i]);
      continue;
    }
    const auto& lower = nodes[it->second];
    const std::size_t a = upper.begin, b = upper.begin + upper.length;
    const std::size_t c = lower.begin, d = lower.begin + lower.length;
    return {std::string(w.substr(0, a)), std::string(w.substr(a, c - a)), std::string(w.substr(c, d - c)),
            std::string(w.substr(d, b - d)), std::string(w.substr(b))};
  }
  throw Error("no repeated nonterminal on a path of a string longer than the pumping length");
}

ContextFreeLang::ContextFreeLang(Alphabet alphabet, std::string_view grammar_text)
    : source_(grammar_text), grammar_(parse_grammar(grammar_text, alphabet)), normal_form_(to_normal_form(grammar_)) {}

}  // namespace foldsys
