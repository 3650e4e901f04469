#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "foldsys/alphabet.hpp"

namespace foldsys {

/// Default cap on the number of strings a single per-length enumeration may
/// produce before ResourceLimitExceeded is raised.
inline constexpr std::size_t kDefaultEnumerationLimit = std::size_t{1} << 20;

struct RegexNode {
  enum class Kind { Empty, Epsilon, Literal, Concat, Union, Star, Plus, Optional };

  Kind kind = Kind::Epsilon;
  char symbol = 0;
  std::vector<RegexNode> children;

  friend bool operator==(const RegexNode&, const RegexNode&) = default;
};

/// Renders the tree as e.g. `Concat(a,a,Star(b))`.
std::string to_string(const RegexNode& node);

/// Grammar: `|` (lowest), juxtaposition, postfix `*` `+` `?`, grouping `( )`.
/// `()` is the empty string and `[]` the empty language. Whitespace is ignored.
RegexNode parse_regex(std::string_view text, const Alphabet& alphabet);

/// Complete deterministic automaton. State 0 is the start state.
class Automaton {
 public:
  using State = std::uint32_t;

  Automaton(Alphabet alphabet, std::vector<State> transitions, std::vector<bool> accepting);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return accepting_.size(); }
  State start() const noexcept { return 0; }
  bool accepting(State q) const { return accepting_[q]; }
  State next(State q, std::size_t symbol_index) const { return transitions_[q * alphabet_.size() + symbol_index]; }

  /// States visited while reading `w` (|w| + 1 entries); nullopt if `w` leaves Σ*.
  std::optional<std::vector<State>> run(std::string_view w) const;

  /// True when some cycle is both reachable and co-reachable.
  bool is_infinite() const;

 private:
  Alphabet alphabet_;
  std::vector<State> transitions_;
  std::vector<bool> accepting_;
};

/// Thompson construction, subset construction with a sink, then minimisation.
Automaton compile(const RegexNode& ast, const Alphabet& alphabet);

bool member(const Automaton& automaton, std::string_view w);

/// All accepted strings of length n in lexicographic order.
std::vector<std::string> enumerate_length(const Automaton& automaton, std::size_t n,
                                          std::size_t limit = kDefaultEnumerationLimit);

/// Lexicographically smallest accepted string of length n, if any.
std::optional<std::string> smallest_of_length(const Automaton& automaton, std::size_t n);

/// profile[n] is true iff some accepted string has length n, for n <= max_len.
std::vector<bool> length_profile(const Automaton& automaton, std::size_t max_len);

/// The state count, which is always a valid pumping length.
std::size_t pumping_length(const Automaton& automaton);

struct RegDecomposition {
  std::string x, y, z;

  std::string pumped(std::size_t i) const;
  friend bool operator==(const RegDecomposition&, const RegDecomposition&) = default;
};

/// Splits at the first repeated state along the run of `w`.
/// Requires member(w) and |w| >= pumping_length.
RegDecomposition reg_decompose(const Automaton& automaton, std::string_view w);

/// A regular language kept together with its source text and syntax tree.
class RegularLang {
 public:
  RegularLang(Alphabet alphabet, std::string_view regex);

  const Alphabet& alphabet() const noexcept { return automaton_.alphabet(); }
  const std::string& source() const noexcept { return source_; }
  const RegexNode& ast() const noexcept { return ast_; }
  const Automaton& automaton() const noexcept { return automaton_; }

 private:
  std::string source_;
  RegexNode ast_;
  Automaton automaton_;
};

}  // namespace foldsys
