#include "foldsys/language.hpp"

namespace foldsys {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

LanguageSpec LanguageSpec::regular(const Alphabet& alphabet, std::string_view regex) {
  return LanguageSpec(RegularLang(alphabet, regex));
}

LanguageSpec LanguageSpec::context_free(const Alphabet& alphabet, std::string_view grammar) {
  return LanguageSpec(ContextFreeLang(alphabet, grammar));
}

const Alphabet& LanguageSpec::alphabet() const noexcept {
  return std::visit([](const auto& lang) -> const Alphabet& { return lang.alphabet(); }, impl_);
}

const std::string& LanguageSpec::source() const noexcept {
  return std::visit([](const auto& lang) -> const std::string& { return lang.source(); }, impl_);
}

bool LanguageSpec::member(std::string_view w) const {
  return std::visit(overloaded{[&](const RegularLang& l) { return foldsys::member(l.automaton(), w); },
                               [&](const ContextFreeLang& l) { return cyk_member(l.normal_form(), w); }},
                    impl_);
}

std::vector<std::string> LanguageSpec::enumerate_length(std::size_t n, std::size_t limit) const {
  return std::visit(
      overloaded{[&](const RegularLang& l) { return foldsys::enumerate_length(l.automaton(), n, limit); },
                 [&](const ContextFreeLang& l) { return foldsys::enumerate_length(l.normal_form(), n, limit); }},
      impl_);
}

std::optional<std::string> LanguageSpec::smallest_of_length(std::size_t n) const {
  return std::visit(overloaded{[&](const RegularLang& l) { return foldsys::smallest_of_length(l.automaton(), n); },
                               [&](const ContextFreeLang& l) { return foldsys::smallest_of_length(l.normal_form(), n); }},
                    impl_);
}

std::vector<bool> LanguageSpec::length_profile(std::size_t max_len) const {
  return std::visit(overloaded{[&](const RegularLang& l) { return foldsys::length_profile(l.automaton(), max_len); },
                               [&](const ContextFreeLang& l) { return foldsys::length_profile(l.normal_form(), max_len); }},
                    impl_);
}

std::size_t LanguageSpec::pumping_length() const {
  return std::visit(overloaded{[](const RegularLang& l) { return foldsys::pumping_length(l.automaton()); },
                               [](const ContextFreeLang& l) { return cfg_pumping_length(l.normal_form()); }},
                    impl_);
}

bool LanguageSpec::is_infinite() const {
  return std::visit(overloaded{[](const RegularLang& l) { return l.automaton().is_infinite(); },
                               [](const ContextFreeLang& l) { return foldsys::is_infinite(l.normal_form()); }},
                    impl_);
}

const char* to_string(LanguageSpec::Kind kind) noexcept {
  return kind == LanguageSpec::Kind::Regular ? "regex" : "cfg";
}

}  // namespace foldsys
