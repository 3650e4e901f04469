#pragma once

#include <string>
#include <string_view>

#include "foldsys/pumping.hpp"

namespace foldsys {

/// {"parts": [...], "pumped": [...], "lemma": "...", "j0": n}, two-space indent,
/// no trailing newline. family_from_json(family_to_json(f)) == f and the
/// reverse holds for any text this function produced.
std::string family_to_json(const PumpFamily& family);

/// Throws ParseError on malformed documents, unknown lemma names, or pumped
/// indices outside the part list.
PumpFamily family_from_json(std::string_view text);

}  // namespace foldsys
