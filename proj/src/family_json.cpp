#include "foldsys/family_json.hpp"

#include <algorithm>
#include <json.hpp>

namespace foldsys {

using ordered_json = nlohmann::ordered_json;

std::string family_to_json(const PumpFamily& family) {
  ordered_json doc;
  doc["parts"] = family.parts;
  doc["pumped"] = family.pumped;
  doc["lemma"] = to_string(family.lemma);
  doc["j0"] = family.j0;
  return doc.dump(2);
}

PumpFamily family_from_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("family JSON: ") + e.what(), e.byte);
  }
  try {
    PumpFamily family;
    family.parts = doc.at("parts").get<std::vector<std::string>>();
    family.pumped = doc.at("pumped").get<std::vector<std::size_t>>();
    const auto lemma = doc.at("lemma").get<std::string>();
    auto kind = lemma_from_string(lemma);
    if (!kind) throw ParseError("family JSON: unknown lemma '" + lemma + "'", 0);
    family.lemma = *kind;
    family.j0 = doc.at("j0").get<std::size_t>();
    if (!std::is_sorted(family.pumped.begin(), family.pumped.end()) ||
        std::adjacent_find(family.pumped.begin(), family.pumped.end()) != family.pumped.end())
      throw ParseError("family JSON: pumped indices must be strictly increasing", 0);
    for (auto k : family.pumped)
      if (k >= family.parts.size())
        throw ParseError("family JSON: pumped index " + std::to_string(k) + " is out of range", 0);
    return family;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("family JSON: ") + e.what(), 0);
  }
}

}  // namespace foldsys
