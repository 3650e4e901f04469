#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <tuple>

#include "foldsys/cfg.hpp"
#include "foldsys/errors.hpp"
#include "oracles.hpp"

using namespace foldsys;

namespace {

const Alphabet kAb("ab");

NormalFormGrammar nf_of(const char* text, const Alphabet& sigma = kAb) {
  return to_normal_form(parse_grammar(text, sigma));
}

bool is_anbn(const std::string& w, char a, char b, std::size_t ratio = 1) {
  const std::size_t n = w.find_first_not_of(a) == std::string::npos ? w.size() : w.find_first_not_of(a);
  if (w.find(a, n) != std::string::npos) return false;
  const std::size_t m = w.size() - n;
  return w.substr(n).find_first_not_of(b) == std::string::npos && n == ratio * m;
}

// Every NF member up to max_len matches the raw grammar's derivable set.
void check_against_oracle(const std::string& text, const Alphabet& sigma, std::size_t max_len) {
  CAPTURE(text);
  const auto g = parse_grammar(text, sigma);
  const auto nf = to_normal_form(g);
  const auto lang = oracle::derivable(g, max_len)[g.start];
  const auto profile = length_profile(nf, max_len);
  for (std::size_t n = 0; n <= max_len; ++n) {
    std::vector<std::string> expected;
    for (auto& w : oracle::all_strings(sigma.symbols(), n)) {
      const bool in = lang.count(w) != 0;
      REQUIRE(cyk_member(nf, w) == in);
      if (in) expected.push_back(w);
    }
    REQUIRE(enumerate_length(nf, n) == expected);
    REQUIRE(profile[n] == !expected.empty());
    REQUIRE(smallest_of_length(nf, n) ==
            (expected.empty() ? std::nullopt : std::optional<std::string>(expected.front())));
  }
}

void check_decomposition(const NormalFormGrammar& nf, const std::string& w) {
  CAPTURE(w);
  const auto d = cfg_decompose(nf, w);
  REQUIRE(d.u + d.v + d.x + d.y + d.z == w);
  REQUIRE(d.v.size() + d.y.size() >= 1);
  REQUIRE(d.v.size() + d.x.size() + d.y.size() <= cfg_pumping_length(nf));
  for (std::size_t i = 0; i <= 4; ++i) REQUIRE(cyk_member(nf, d.pumped(i)));
}

}  // namespace

TEST_CASE("parse_grammar accepts the documented syntax") {
  const auto g = parse_grammar("S -> a S b | eps  # balanced\n", kAb);
  REQUIRE(g.nonterminals.size() == 1);
  CHECK(g.productions[0].size() == 2);
  CHECK(g.productions[0][1].empty());
  const auto two = parse_grammar("S -> A B\nA -> a\nB -> b | B b", kAb);
  CHECK(two.nonterminals.size() == 3);
  CHECK(two.start == 0);
}

TEST_CASE("parse_grammar errors") {
  CHECK_THROWS_AS(parse_grammar("S -> a X", kAb), ParseError);
  CHECK_THROWS_AS(parse_grammar("S a b", kAb), ParseError);
  CHECK_THROWS_AS(parse_grammar("S -> a eps", kAb), ParseError);
  CHECK_THROWS_AS(parse_grammar("S -> c", kAb), Error);
  CHECK_THROWS_AS(parse_grammar("", kAb), ParseError);
}

TEST_CASE("normal form shape") {
  const auto only_eps = nf_of("S -> eps");
  CHECK(only_eps.accepts_empty);
  CHECK(only_eps.binary.empty());
  CHECK(only_eps.terminal.empty());
  CHECK(cyk_member(only_eps, ""));
  CHECK_FALSE(cyk_member(only_eps, "a"));

  const auto pruned = nf_of("S -> a\nX -> b X");
  for (const auto& name : pruned.names) CHECK(name != "X");
  CHECK(cyk_member(pruned, "a"));
  CHECK_FALSE(cyk_member(pruned, "b"));

  const auto anbn = nf_of("S -> a S b | eps");
  CHECK(anbn.accepts_empty);
  for (const auto& rule : anbn.binary) {
    CHECK(rule.left != anbn.start);
    CHECK(rule.right != anbn.start);
  }
}

TEST_CASE("membership and enumeration examples") {
  const auto anbn = nf_of("S -> a S b | eps");
  CHECK(cyk_member(anbn, "aabb"));
  CHECK_FALSE(cyk_member(anbn, "aab"));
  CHECK(enumerate_length(anbn, 4) == std::vector<std::string>{"aabb"});
  CHECK(enumerate_length(anbn, 3).empty());
  const auto undn = nf_of("S -> u S d | eps", Alphabet::directions());
  CHECK(enumerate_length(undn, 6) == std::vector<std::string>{"uuuddd"});
  CHECK_THROWS_AS(enumerate_length(nf_of("S -> a S | b S | eps"), 6, 10), ResourceLimitExceeded);
}

TEST_CASE("normal form agrees with derivation search on fixtures") {
  check_against_oracle("S -> a S b | eps", kAb, 8);
  check_against_oracle("S -> u S d | eps", Alphabet::directions(), 8);
  check_against_oracle("S -> a S | eps", kAb, 8);
  check_against_oracle("S -> S a | eps", kAb, 8);
  check_against_oracle("S -> a a S b | eps", kAb, 8);
  check_against_oracle("S -> a S b S | eps", kAb, 8);
  check_against_oracle("S -> A B | B\nA -> a A | eps\nB -> b | A", kAb, 8);
  check_against_oracle("S -> S S | a | eps", kAb, 8);
  check_against_oracle("S -> A\nA -> B\nB -> S | a b", kAb, 8);
}

TEST_CASE("normal form agrees with derivation search on random grammars") {
  std::mt19937 rng(4242);
  for (int iter = 0; iter < 120; ++iter) check_against_oracle(oracle::random_grammar(rng, "ab"), kAb, 7);
}

TEST_CASE("cyk agrees with the oracle on random strings") {
  const auto g = parse_grammar("S -> a S b S | eps", kAb);
  const auto nf = to_normal_form(g);
  const auto lang = oracle::derivable(g, 10)[g.start];
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> len(0, 10);
  for (int k = 0; k < 1000; ++k) {
    const auto w = oracle::random_string(rng, "ab", len(rng));
    REQUIRE(cyk_member(nf, w) == (lang.count(w) != 0));
  }
}

TEST_CASE("pumping length formula") {
  NormalFormGrammar one{Alphabet("a"), {"S"}, 0, false, {}, {{0, 'a'}}};
  CHECK(cfg_pumping_length(one) == 4);
  NormalFormGrammar three{Alphabet("a"), {"S", "A", "B"}, 0, false, {{0, 1, 2}}, {{1, 'a'}, {2, 'a'}}};
  CHECK(cfg_pumping_length(three) == 16);
  const auto anbn = nf_of("S -> a S b | eps");
  CHECK(cfg_pumping_length(anbn) == (std::size_t{1} << (anbn.nonterminal_count() + 1)));
}

TEST_CASE("parse trees cover the word") {
  const auto nf = nf_of("S -> a S b S | eps");
  const std::string w = "aababb";
  const auto tree = parse_tree(nf, w);
  REQUIRE(!tree.empty());
  CHECK(tree[0].nonterminal == nf.start);
  CHECK(tree[0].begin == 0);
  CHECK(tree[0].length == w.size());
  for (const auto& node : tree) {
    if (node.left < 0) {
      CHECK(node.length == 1);
      continue;
    }
    const auto& l = tree[node.left];
    const auto& r = tree[node.right];
    CHECK(l.begin == node.begin);
    CHECK(r.begin == l.begin + l.length);
    CHECK(l.length + r.length == node.length);
  }
  CHECK_THROWS_AS(parse_tree(nf, "ba"), PreconditionError);
}

TEST_CASE("decomposition examples") {
  const auto anbn = nf_of("S -> a S b | eps");
  const std::size_t p = cfg_pumping_length(anbn);
  for (std::size_t n = p / 2; n <= p / 2 + 6; ++n) {
    const std::string w = std::string(n, 'a') + std::string(n, 'b');
    check_decomposition(anbn, w);
    const auto d = cfg_decompose(anbn, w);
    CHECK(d.v == "a");
    CHECK(d.y == "b");
    for (std::size_t i = 0; i <= 4; ++i) CHECK(is_anbn(d.pumped(i), 'a', 'b'));
  }
  const auto undn = nf_of("S -> u S d | eps", Alphabet::directions());
  const std::size_t q = cfg_pumping_length(undn);
  const auto d = cfg_decompose(undn, std::string(q / 2, 'u') + std::string(q / 2, 'd'));
  CHECK(d.v.find_first_not_of('u') == std::string::npos);
  CHECK(d.y.find_first_not_of('d') == std::string::npos);
  CHECK_FALSE(d.v.empty());
  CHECK_FALSE(d.y.empty());

  CHECK_THROWS_AS(cfg_decompose(anbn, "aabb"), PreconditionError);
  CHECK_THROWS_AS(cfg_decompose(anbn, std::string(p, 'a')), PreconditionError);
}

TEST_CASE("decomposition pump check on fixtures") {
  using Gen = std::function<std::string(std::size_t, std::mt19937&)>;
  auto repeat = [](char c, std::size_t n) { return std::string(n, c); };
  // random member of length >= n for each fixture
  const std::vector<std::tuple<std::string, std::string, Gen>> fixtures = {
      {"S -> a S b | eps", "ab", [&](std::size_t n, std::mt19937&) { return repeat('a', n) + repeat('b', n); }},
      {"S -> a a S b | eps", "ab", [&](std::size_t n, std::mt19937&) { return repeat('a', 2 * n) + repeat('b', n); }},
      {"S -> a S | eps", "ab", [&](std::size_t n, std::mt19937&) { return repeat('a', n); }},
      {"S -> S a | eps", "ab", [&](std::size_t n, std::mt19937&) { return repeat('a', n); }},
      {"S -> u u S d | eps", "du", [&](std::size_t n, std::mt19937&) { return repeat('u', 2 * n) + repeat('d', n); }},
      {"S -> a S b S | eps", "ab",
       [&](std::size_t n, std::mt19937& rng) {
         std::string w;
         std::size_t open = 0, left = n;
         std::bernoulli_distribution coin(0.5);
         while (left > 0 || open > 0) {
           if (left > 0 && (open == 0 || coin(rng))) {
             w += 'a';
             ++open;
             --left;
           } else {
             w += 'b';
             --open;
           }
         }
         return w;
       }},
      {"S -> A B\nA -> a A | a\nB -> b B | b", "ab",
       [&](std::size_t n, std::mt19937& rng) {
         std::uniform_int_distribution<std::size_t> split(1, n - 1);
         const std::size_t k = split(rng);
         return repeat('a', k) + repeat('b', n - k);
       }}};
  std::mt19937 rng(11);
  for (const auto& [text, sigma_text, gen] : fixtures) {
    CAPTURE(text);
    const auto nf = to_normal_form(parse_grammar(text, Alphabet(sigma_text)));
    const std::size_t p = cfg_pumping_length(nf);
    const auto smallest = smallest_of_length(nf, p);
    if (smallest) check_decomposition(nf, *smallest);
    std::size_t n = 2;
    while (gen(n, rng).size() < p) ++n;
    for (std::size_t k = 0; k < 20; ++k) {
      const std::string w = gen(n + k, rng);
      REQUIRE(cyk_member(nf, w));
      check_decomposition(nf, w);
    }
  }
}

TEST_CASE("degenerate decompositions expose empty v or y") {
  const auto right = nf_of("S -> a S | eps");
  const auto dr = cfg_decompose(right, std::string(cfg_pumping_length(right), 'a'));
  CHECK((dr.v.empty() || dr.y.empty()));
  const auto left = nf_of("S -> S a | eps");
  const auto dl = cfg_decompose(left, std::string(cfg_pumping_length(left), 'a'));
  CHECK((dl.v.empty() || dl.y.empty()));
}

TEST_CASE("is_infinite") {
  CHECK(is_infinite(nf_of("S -> a S b | eps")));
  CHECK_FALSE(is_infinite(nf_of("S -> a b | b a | eps")));
  CHECK_FALSE(is_infinite(nf_of("S -> a\nX -> X a")));
}
