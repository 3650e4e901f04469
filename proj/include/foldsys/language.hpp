#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "foldsys/cfg.hpp"
#include "foldsys/regular.hpp"

namespace foldsys {

/// Either a regular or a context-free language, with the queries the F-system
/// oracle and the pumping constructions need.
class LanguageSpec {
 public:
  enum class Kind { Regular, ContextFree };

  static LanguageSpec regular(const Alphabet& alphabet, std::string_view regex);
  static LanguageSpec context_free(const Alphabet& alphabet, std::string_view grammar);

  Kind kind() const noexcept { return impl_.index() == 0 ? Kind::Regular : Kind::ContextFree; }
  const Alphabet& alphabet() const noexcept;
  const std::string& source() const noexcept;

  const RegularLang* as_regular() const noexcept { return std::get_if<RegularLang>(&impl_); }
  const ContextFreeLang* as_context_free() const noexcept { return std::get_if<ContextFreeLang>(&impl_); }

  bool member(std::string_view w) const;
  std::vector<std::string> enumerate_length(std::size_t n, std::size_t limit = kDefaultEnumerationLimit) const;
  std::optional<std::string> smallest_of_length(std::size_t n) const;
  std::vector<bool> length_profile(std::size_t max_len) const;
  std::size_t pumping_length() const;
  bool is_infinite() const;

 private:
  explicit LanguageSpec(std::variant<RegularLang, ContextFreeLang> impl) : impl_(std::move(impl)) {}

  std::variant<RegularLang, ContextFreeLang> impl_;
};

const char* to_string(LanguageSpec::Kind kind) noexcept;

}  // namespace foldsys
