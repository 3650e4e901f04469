#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace foldsys {

/// Finite ordered set of single-character symbols.
///
/// Symbols are kept sorted by character code; every "lexicographic" order in
/// the library is taken with respect to this order.
class Alphabet {
 public:
  /// Accepts either juxtaposed symbols ("ab") or whitespace-separated ones
  /// ("a b"). Throws SymbolError on an empty set or a repeated symbol.
  explicit Alphabet(std::string_view symbols);

  /// The procedure alphabet {d, u}.
  static const Alphabet& directions();

  bool contains(char c) const noexcept { return symbols_.find(c) != std::string::npos; }
  bool contains_all(std::string_view w) const noexcept;
  /// Throws SymbolError naming the first foreign symbol of `w`.
  void check(std::string_view w) const;

  const std::string& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  char operator[](std::size_t i) const { return symbols_[i]; }
  std::size_t index_of(char c) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string symbols_;
};

}  // namespace foldsys
