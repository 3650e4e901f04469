#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "foldsys/alphabet.hpp"

namespace foldsys {

enum class Direction : unsigned char { Up, Down };

char to_char(Direction d) noexcept;
/// 'u' -> Up, 'd' -> Down; anything else is a SymbolError.
Direction direction_from_char(char c);

/// A folding procedure string over {u, d}.
using ProcString = std::vector<Direction>;

ProcString parse_proc(std::string_view v);
std::string to_string(std::span<const Direction> v);

/// One application of f: prepend on Up, append on Down.
std::string fold_step(std::string_view stack, char symbol, Direction direction);
/// Same, rejecting symbols outside `alphabet`.
std::string fold_step(const Alphabet& alphabet, std::string_view stack, char symbol, Direction direction);

/// h(w, v). Throws UndefinedFold when the lengths differ.
std::string fold(std::string_view w, std::span<const Direction> v);
/// h(w, v) with v spelled over {u, d}.
std::string fold(std::string_view w, std::string_view v);

struct UpDownSplit {
  std::string up;    // symbols folded up, original order
  std::string down;  // symbols folded down, original order
};

UpDownSplit split_updown(std::string_view w, std::span<const Direction> v);
UpDownSplit split_updown(std::string_view w, std::string_view v);

struct FoldStep {
  std::string stack;  // stack after this step
  char symbol;
  Direction direction;
};

using FoldTrace = std::vector<FoldStep>;

FoldTrace fold_trace(std::string_view w, std::span<const Direction> v);
FoldTrace fold_trace(std::string_view w, std::string_view v);

/// Position permutation realised by folding with `v`: fold(w, v)[k] == w[perm[k]].
std::vector<std::size_t> fold_permutation(std::span<const Direction> v);

}  // namespace foldsys
