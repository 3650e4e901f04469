#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "foldsys/alphabet.hpp"
#include "foldsys/regular.hpp"

namespace foldsys {

struct GrammarSymbol {
  bool terminal = true;
  char symbol = 0;              // when terminal
  std::size_t nonterminal = 0;  // when !terminal

  friend auto operator<=>(const GrammarSymbol&, const GrammarSymbol&) = default;
};

using Rhs = std::vector<GrammarSymbol>;

/// A context-free grammar as written by the user.
struct Grammar {
  Alphabet terminals;
  std::vector<std::string> nonterminals;
  std::vector<std::vector<Rhs>> productions;  // indexed like `nonterminals`
  std::size_t start = 0;
};

/// One production group per line: `A -> alpha | beta | eps`. Nonterminals are
/// uppercase identifiers, terminals single characters of `terminals`. The
/// first left-hand side is the start symbol. `#` starts a comment.
Grammar parse_grammar(std::string_view text, const Alphabet& terminals);

/// Chomsky normal form: only A -> B C and A -> a, plus an optional start -> eps.
struct NormalFormGrammar {
  struct Binary {
    std::uint32_t lhs, left, right;
  };
  struct Terminal {
    std::uint32_t lhs;
    char symbol;
  };

  Alphabet terminals;
  std::vector<std::string> names;
  std::uint32_t start = 0;
  bool accepts_empty = false;
  std::vector<Binary> binary;
  std::vector<Terminal> terminal;

  std::size_t nonterminal_count() const noexcept { return names.size(); }
};

/// START, DEL, UNIT, useless-symbol pruning, TERM, BIN (with shared tails).
NormalFormGrammar to_normal_form(const Grammar& grammar);

bool cyk_member(const NormalFormGrammar& nf, std::string_view w);

/// Members of length n, lexicographic.
std::vector<std::string> enumerate_length(const NormalFormGrammar& nf, std::size_t n,
                                          std::size_t limit = kDefaultEnumerationLimit);

std::optional<std::string> smallest_of_length(const NormalFormGrammar& nf, std::size_t n);
std::vector<bool> length_profile(const NormalFormGrammar& nf, std::size_t max_len);

/// True when the (pruned) nonterminal graph has a cycle.
bool is_infinite(const NormalFormGrammar& nf);

/// 2^(k+1) for k normal-form nonterminals (saturating).
std::size_t cfg_pumping_length(const NormalFormGrammar& nf);

struct ParseNode {
  std::uint32_t nonterminal;
  std::size_t begin, length;
  std::int64_t left = -1, right = -1;  // children; both -1 for A -> a
};

/// Deterministic parse tree: first rule, then shortest left split. Node 0 is the root.
/// Requires a non-empty member.
std::vector<ParseNode> parse_tree(const NormalFormGrammar& nf, std::string_view w);

struct CfgDecomposition {
  std::string u, v, x, y, z;

  std::string pumped(std::size_t i) const;
  friend bool operator==(const CfgDecomposition&, const CfgDecomposition&) = default;
};

/// Lowest repeated nonterminal pair on the longest root-to-leaf path.
/// Requires membership and |w| >= cfg_pumping_length.
CfgDecomposition cfg_decompose(const NormalFormGrammar& nf, std::string_view w);

class ContextFreeLang {
 public:
  ContextFreeLang(Alphabet alphabet, std::string_view grammar_text);

  const Alphabet& alphabet() const noexcept { return grammar_.terminals; }
  const std::string& source() const noexcept { return source_; }
  const Grammar& grammar() const noexcept { return grammar_; }
  const NormalFormGrammar& normal_form() const noexcept { return normal_form_; }

 private:
  std::string source_;
  Grammar grammar_;
  NormalFormGrammar normal_form_;
};

}  // namespace foldsys
