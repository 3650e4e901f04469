#include "foldsys/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "foldsys/errors.hpp"

namespace foldsys {

Alphabet::Alphabet(std::string_view symbols) {
  for (char c : symbols) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (symbols_.find(c) != std::string::npos)
      throw SymbolError(std::string("duplicate alphabet symbol '") + c + "'");
    symbols_.push_back(c);
  }
  if (symbols_.empty()) throw SymbolError("alphabet must not be empty");
  std::sort(symbols_.begin(), symbols_.end());
}

const Alphabet& Alphabet::directions() {
  static const Alphabet gamma("du");
  return gamma;
}

bool Alphabet::contains_all(std::string_view w) const noexcept {
  return std::all_of(w.begin(), w.end(), [this](char c) { return contains(c); });
}

void Alphabet::check(std::string_view w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!contains(w[i]))
      throw SymbolError(std::string("symbol '") + w[i] + "' at position " + std::to_string(i) +
                        " is not in alphabet {" + symbols_ + "}");
  }
}

std::size_t Alphabet::index_of(char c) const {
  auto pos = symbols_.find(c);
  if (pos == std::string::npos) throw SymbolError(std::string("symbol '") + c + "' is not in alphabet {" + symbols_ + "}");
  return pos;
}

}  // namespace foldsys
