#include "foldsys/folding.hpp"

#include <algorithm>
#include <deque>

#include "foldsys/errors.hpp"

namespace foldsys {

char to_char(Direction d) noexcept { return d == Direction::Up ? 'u' : 'd'; }

Direction direction_from_char(char c) {
  if (c == 'u') return Direction::Up;
  if (c == 'd') return Direction::Down;
  throw SymbolError(std::string("procedure symbol '") + c + "' is not in {u, d}");
}

ProcString parse_proc(std::string_view v) {
  ProcString out;
  out.reserve(v.size());
  for (char c : v) out.push_back(direction_from_char(c));
  return out;
}

std::string to_string(std::span<const Direction> v) {
  std::string out;
  out.reserve(v.size());
  for (Direction d : v) out.push_back(to_char(d));
  return out;
}

std::string fold_step(std::string_view stack, char symbol, Direction direction) {
  std::string out;
  out.reserve(stack.size() + 1);
  if (direction == Direction::Up) {
    out.push_back(symbol);
    out.append(stack);
  } else {
    out.append(stack);
    out.push_back(symbol);
  }
  return out;
}

std::string fold_step(const Alphabet& alphabet, std::string_view stack, char symbol, Direction direction) {
  if (!alphabet.contains(symbol))
    throw SymbolError(std::string("symbol '") + symbol + "' is not in alphabet {" + alphabet.symbols() + "}");
  return fold_step(stack, symbol, direction);
}

std::string fold(std::string_view w, std::span<const Direction> v) {
  if (w.size() != v.size()) throw UndefinedFold(w.size(), v.size());
  std::deque<char> stack;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (v[i] == Direction::Up)
      stack.push_front(w[i]);
    else
      stack.push_back(w[i]);
  }
  return {stack.begin(), stack.end()};
}

std::string fold(std::string_view w, std::string_view v) {
  if (w.size() != v.size()) throw UndefinedFold(w.size(), v.size());
  return fold(w, parse_proc(v));
}

UpDownSplit split_updown(std::string_view w, std::span<const Direction> v) {
  if (w.size() != v.size()) throw UndefinedFold(w.size(), v.size());
  UpDownSplit out;
  for (std::size_t i = 0; i < w.size(); ++i) (v[i] == Direction::Up ? out.up : out.down).push_back(w[i]);
  return out;
}

UpDownSplit split_updown(std::string_view w, std::string_view v) {
  if (w.size() != v.size()) throw UndefinedFold(w.size(), v.size());
  return split_updown(w, parse_proc(v));
}

FoldTrace fold_trace(std::string_view w, std::span<const Direction> v) {
  if (w.size() != v.size()) throw UndefinedFold(w.size(), v.size());
  FoldTrace trace;
  trace.reserve(w.size());
  std::string stack;
  for (std::size_t i = 0; i < w.size(); ++i) {
    stack = fold_step(stack, w[i], v[i]);
    trace.push_back({stack, w[i], v[i]});
  }
  return trace;
}

FoldTrace fold_trace(std::string_view w, std::string_view v) {
  if (w.size() != v.size()) throw UndefinedFold(w.size(), v.size());
  return fold_trace(w, parse_proc(v));
}

std::vector<std::size_t> fold_permutation(std::span<const Direction> v) {
  std::vector<std::size_t> perm;
  perm.reserve(v.size());
  for (std::size_t i = v.size(); i-- > 0;)
    if (v[i] == Direction::Up) perm.push_back(i);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == Direction::Down) perm.push_back(i);
  return perm;
}

}  // namespace foldsys
