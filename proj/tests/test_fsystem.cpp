#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "foldsys/errors.hpp"
#include "foldsys/folding.hpp"
#include "foldsys/fsystem.hpp"
#include "oracles.hpp"

using namespace foldsys;

namespace {

const Alphabet kAb("ab");

FSystem aaaab_system() {
  return FSystem(LanguageSpec::regular(kAb, "aaaab*"), LanguageSpec::regular(Alphabet::directions(), "(uu)*ddd"));
}

std::vector<std::string> words_of(const std::vector<FsWord>& entries) {
  std::vector<std::string> out;
  for (const auto& e : entries) out.push_back(e.word);
  return out;
}

// Sorted by (length, lex), as fs_enumerate reports.
std::vector<std::string> shortlex(const std::set<std::string>& s) {
  std::vector<std::string> out(s.begin(), s.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

std::function<bool(const std::string&)> regex_oracle(const std::string& text, const Alphabet& sigma) {
  auto ast = parse_regex(text, sigma);
  return [ast](const std::string& w) { return oracle::regex_match(ast, w); };
}

std::function<bool(const std::string&)> grammar_oracle(const std::string& text, const Alphabet& sigma,
                                                       std::size_t max_len) {
  const auto g = parse_grammar(text, sigma);
  auto lang = oracle::derivable(g, max_len)[g.start];
  return [lang](const std::string& w) { return lang.count(w) != 0; };
}

}  // namespace

TEST_CASE("aaaab* over (uu)*ddd enumerates aaaab + (bb)*aaaabbb") {
  CHECK(words_of(fs_enumerate(aaaab_system(), 9)) == std::vector<std::string>{"aaaab", "aaaabbb", "bbaaaabbb"});
  CHECK(words_of(fs_enumerate(aaaab_system(), 13)) ==
        std::vector<std::string>{"aaaab", "aaaabbb", "bbaaaabbb", "bbbbaaaabbb", "bbbbbbaaaabbb"});
}

TEST_CASE("fs_enumerate witnesses re-fold to their word") {
  for (bool parallel : {false, true}) {
    OracleLimits limits;
    limits.parallel = parallel;
    for (const auto& entry : fs_enumerate(aaaab_system(), 13, limits)) {
      CHECK(fold(entry.witness.core, entry.witness.proc) == entry.word);
      CHECK(fs_member(aaaab_system(), entry.word, limits));
    }
  }
}

TEST_CASE("fs_member examples") {
  CHECK(fs_member(aaaab_system(), "aaaab"));
  CHECK_FALSE(fs_member(aaaab_system(), "aaaabb"));
  CHECK_FALSE(fs_member(aaaab_system(), ""));
  CHECK_FALSE(fs_member(aaaab_system(), "aaaxb"));
  const FSystem both_eps(LanguageSpec::regular(kAb, "a*"), LanguageSpec::regular(Alphabet::directions(), "d*"));
  CHECK(fs_member(both_eps, ""));
  const auto w = fs_witness(aaaab_system(), "bbaaaabbb");
  REQUIRE(w);
  CHECK(fold(w->core, w->proc) == "bbaaaabbb");
}

TEST_CASE("(L1, d*) has language L1") {
  const FSystem phi(LanguageSpec::context_free(kAb, "S -> a S b | b"), LanguageSpec::regular(Alphabet::directions(), "d*"));
  std::vector<std::string> expected;
  for (std::size_t n = 0; n <= 9; ++n)
    for (auto& w : phi.core().enumerate_length(n)) expected.push_back(w);
  CHECK(words_of(fs_enumerate(phi, 9)) == expected);
}

TEST_CASE("fs_enumerate agrees with brute force on fixed systems") {
  const auto& gamma = Alphabet::directions();
  struct Case {
    LanguageSpec core, proc;
    std::function<bool(const std::string&)> in_core, in_proc;
  };
  std::vector<Case> cases;
  cases.push_back({LanguageSpec::regular(kAb, "aaaab*"), LanguageSpec::regular(gamma, "(uu)*ddd"),
                   regex_oracle("aaaab*", kAb), regex_oracle("(uu)*ddd", gamma)});
  cases.push_back({LanguageSpec::context_free(kAb, "S -> a S b | eps"),
                   LanguageSpec::context_free(gamma, "S -> u S d | eps"), grammar_oracle("S -> a S b | eps", kAb, 8),
                   grammar_oracle("S -> u S d | eps", gamma, 8)});
  cases.push_back({LanguageSpec::regular(kAb, "(ab|b)*"), LanguageSpec::regular(gamma, "u*d*"),
                   regex_oracle("(ab|b)*", kAb), regex_oracle("u*d*", gamma)});
  cases.push_back({LanguageSpec::context_free(kAb, "S -> a S b S | eps"), LanguageSpec::regular(gamma, "(ud|d)*"),
                   grammar_oracle("S -> a S b S | eps", kAb, 8), regex_oracle("(ud|d)*", gamma)});
  for (auto& c : cases) {
    const FSystem phi(c.core, c.proc);
    CAPTURE(c.core.source());
    CAPTURE(c.proc.source());
    const auto expected = shortlex(oracle::fs_language("ab", 8, c.in_core, c.in_proc));
    CHECK(words_of(fs_enumerate(phi, 8)) == expected);
  }
}

TEST_CASE("fs_enumerate agrees with brute force on random regular systems") {
  std::mt19937 rng(77);
  const auto& gamma = Alphabet::directions();
  for (int iter = 0; iter < 40; ++iter) {
    const auto core_text = oracle::random_regex(rng, "ab", 3);
    const auto proc_text = oracle::random_regex(rng, "du", 3);
    CAPTURE(core_text);
    CAPTURE(proc_text);
    const FSystem phi(LanguageSpec::regular(kAb, core_text), LanguageSpec::regular(gamma, proc_text));
    const auto expected =
        shortlex(oracle::fs_language("ab", 7, regex_oracle(core_text, kAb), regex_oracle(proc_text, gamma)));
    REQUIRE(words_of(fs_enumerate(phi, 7)) == expected);
    for (const auto& w : expected) REQUIRE(fs_member(phi, w));
  }
}

TEST_CASE("folds of random equal-length members are members") {
  std::mt19937 rng(5);
  const FSystem phi(LanguageSpec::context_free(kAb, "S -> a S b S | eps"),
                    LanguageSpec::regular(Alphabet::directions(), "(u|dd)*"));
  for (std::size_t n = 0; n <= 10; n += 2) {
    const auto cores = phi.core().enumerate_length(n);
    const auto procs = phi.proc().enumerate_length(n);
    if (cores.empty() || procs.empty()) continue;
    for (int k = 0; k < 10; ++k) {
      const auto& r = cores[rng() % cores.size()];
      const auto& s = procs[rng() % procs.size()];
      REQUIRE(fs_member(phi, fold(r, s)));
    }
  }
}

TEST_CASE("resource guard is reported, not truncated") {
  const FSystem phi(LanguageSpec::regular(kAb, "(a|b)*"), LanguageSpec::regular(Alphabet::directions(), "(u|d)*"));
  OracleLimits limits;
  limits.max_pairs_per_length = 1000;
  CHECK_THROWS_AS(fs_enumerate(phi, 8, limits), ResourceLimitExceeded);
  limits.max_strings_per_length = 100;
  limits.max_pairs_per_length = 1 << 20;
  CHECK_THROWS_AS(fs_enumerate(phi, 8, limits), ResourceLimitExceeded);
  CHECK_NOTHROW(fs_enumerate(phi, 4, limits));
}

TEST_CASE("procedure languages must be over u and d") {
  CHECK_THROWS_AS(FSystem(LanguageSpec::regular(kAb, "a*"), LanguageSpec::regular(kAb, "a*")), SymbolError);
}

TEST_CASE("equal_length_pair") {
  const auto pair = equal_length_pair(aaaab_system(), 9, 40);
  CHECK(pair.core == "aaaabbbbb");
  CHECK(pair.proc == "uuuuuuddd");
  const auto& gamma = Alphabet::directions();
  const FSystem star(LanguageSpec::regular(kAb, "a*"), LanguageSpec::regular(gamma, "d*"));
  const auto empty = equal_length_pair(star, 0, 10);
  CHECK(empty.core.empty());
  CHECK(empty.proc.empty());
  const FSystem disjoint(LanguageSpec::regular(kAb, "aa"), LanguageSpec::regular(gamma, "ddd"));
  CHECK_THROWS_AS(equal_length_pair(disjoint, 0, 50), NotFound);
}

TEST_CASE("finite language systems") {
  const std::vector<std::string> ab_b{"ab", "b"};
  CHECK(words_of(fs_enumerate(finite_language_system(kAb, ab_b), 2)) == std::vector<std::string>{"b", "ab"});
  CHECK(fs_enumerate(finite_language_system(kAb, {}), 5).empty());
  const std::vector<std::string> single{"aaaab"};
  CHECK(fs_member(finite_language_system(kAb, single), "aaaab"));
  const std::vector<std::string> with_eps{"", "a"};
  CHECK(words_of(fs_enumerate(finite_language_system(kAb, with_eps), 3)) == std::vector<std::string>{"", "a"});
  const std::vector<std::string> bad{"ac"};
  CHECK_THROWS_AS(finite_language_system(kAb, bad), SymbolError);
}

TEST_CASE("spec files") {
  const auto phi = parse_fsystem_spec(
      "# sample\n"
      "alphabet = a b\n"
      "core.kind = regex\n"
      "core.regex = aaaab*   # trailing comment\n"
      "proc.kind = regex\n"
      "proc.regex = (uu)*ddd\n");
  CHECK(phi.core().source() == "aaaab*");
  CHECK(phi.proc().kind() == LanguageSpec::Kind::Regular);

  const auto cf = parse_fsystem_spec(
      "alphabet = ab\n"
      "core.kind = cfg\n"
      "core.cfg = S -> a S b | A\n"
      "core.cfg = A -> eps\n"
      "proc.kind = cfg\n"
      "proc.cfg = S -> u S d | eps\n");
  CHECK(cf.core().kind() == LanguageSpec::Kind::ContextFree);
  CHECK(cf.core().member("aabb"));
  CHECK(cf.proc().member("uudd"));

  const auto fixture = load_fsystem_spec(FOLDSYS_SPEC_DIR "/aaaab_uuddd.fsys");
  CHECK(words_of(fs_enumerate(fixture, 9)) == std::vector<std::string>{"aaaab", "aaaabbb", "bbaaaabbb"});
}

TEST_CASE("spec file errors") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_fsystem_spec(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 0;
  };
  CHECK(line_of("alphabet = a\nproc.alphabet = u d\n") == 2);
  CHECK(line_of("alphabet = a\n\nbogus = 1\n") == 3);
  CHECK(line_of("alphabet = a\nalphabet = b\n") == 2);
  CHECK(line_of("alphabet = a\ncore.kind = dfa\ncore.regex = a\nproc.kind = regex\nproc.regex = d\n") == 2);
  CHECK(line_of("alphabet a\n") == 1);
  CHECK_THROWS_AS(parse_fsystem_spec("alphabet = a\ncore.kind = regex\ncore.regex = a\n"), ParseError);
  CHECK_THROWS_AS(parse_fsystem_spec("alphabet = a\ncore.kind = cfg\nproc.kind = regex\nproc.regex = d\n"), ParseError);
  CHECK_THROWS_AS(load_fsystem_spec("/nonexistent/spec.fsys"), Error);
}
