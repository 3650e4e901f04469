#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include <map>
#include <random>

#include "foldsys/kernels.hpp"
#include "oracles.hpp"

using namespace foldsys;

namespace {

std::vector<std::string> words(std::mt19937& rng, std::size_t count, std::size_t len, const std::string& sigma) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(oracle::random_string(rng, sigma, len));
  return out;
}

// Force a real team even on a single-core host.
struct Threads {
  int saved = omp_get_max_threads();
  explicit Threads(int n) { omp_set_num_threads(n); }
  ~Threads() { omp_set_num_threads(saved); }
};

}  // namespace

TEST_CASE("fold_into matches the definition") {
  std::mt19937 rng(1);
  std::string out;
  for (int k = 0; k < 500; ++k) {
    const auto n = static_cast<std::size_t>(k % 13);
    const auto w = oracle::random_string(rng, "abc", n);
    const auto v = oracle::random_string(rng, "du", n);
    kernels::fold_into(w, v, out);
    REQUIRE(out == oracle::fold(w, v));
  }
}

TEST_CASE("fold_pairs: serial, parallel and brute force agree") {
  Threads team(4);
  std::mt19937 rng(2);
  for (int iter = 0; iter < 30; ++iter) {
    const std::size_t n = 1 + iter % 9;
    const auto cores = words(rng, 1 + iter * 3, n, "abc");
    const auto procs = words(rng, 1 + iter * 2, n, "du");
    std::map<std::string, std::pair<std::uint32_t, std::uint32_t>> expected;
    for (std::uint32_t i = 0; i < cores.size(); ++i)
      for (std::uint32_t j = 0; j < procs.size(); ++j) expected.try_emplace(oracle::fold(cores[i], procs[j]), i, j);

    const auto serial = kernels::fold_pairs_serial(cores, procs);
    const auto parallel = kernels::fold_pairs_parallel(cores, procs);
    REQUIRE(serial.size() == expected.size());
    REQUIRE(parallel.size() == expected.size());
    std::size_t k = 0;
    for (const auto& [word, witness] : expected) {
      REQUIRE(serial[k].word == word);
      REQUIRE(parallel[k].word == word);
      REQUIRE(serial[k].core == witness.first);
      REQUIRE(serial[k].proc == witness.second);
      REQUIRE(parallel[k].core == witness.first);
      REQUIRE(parallel[k].proc == witness.second);
      ++k;
    }
  }
}

TEST_CASE("find_fold returns the smallest witness") {
  Threads team(4);
  std::mt19937 rng(3);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = 1 + iter % 8;
    const auto cores = words(rng, 20, n, "ab");
    const auto procs = words(rng, 20, n, "du");
    const std::string target = iter % 3 == 0 ? oracle::random_string(rng, "ab", n)
                                             : oracle::fold(cores[iter % cores.size()], procs[iter % procs.size()]);
    std::optional<std::pair<std::uint32_t, std::uint32_t>> expected;
    for (std::uint32_t i = 0; i < cores.size() && !expected; ++i)
      for (std::uint32_t j = 0; j < procs.size() && !expected; ++j)
        if (oracle::fold(cores[i], procs[j]) == target) expected = std::make_pair(i, j);
    REQUIRE(kernels::find_fold_serial(target, cores, procs) == expected);
    REQUIRE(kernels::find_fold_parallel(target, cores, procs) == expected);
  }
  CHECK_FALSE(kernels::find_fold_serial("ab", {}, {}).has_value());
  CHECK_FALSE(kernels::find_fold_parallel("ab", {}, {}).has_value());
}

TEST_CASE("cyk tables: serial equals parallel") {
  Threads team(4);
  std::mt19937 rng(4);
  const std::vector<std::string> grammars = {"S -> a S b S | eps", "S -> a S b | eps", "S -> S S | a | b a",
                                             "S -> A B | eps\nA -> a A | a\nB -> b B | b"};
  for (const auto& text : grammars) {
    const auto nf = to_normal_form(parse_grammar(text, Alphabet("ab")));
    for (std::size_t n : {1u, 5u, 40u, 70u, 130u}) {
      const auto w = oracle::random_string(rng, "ab", n);
      REQUIRE(kernels::cyk_fill_serial(nf, w) == kernels::cyk_fill_parallel(nf, w));
    }
    std::string dyck;
    for (int k = 0; k < 40; ++k) dyck += "aabb";
    const auto serial = kernels::cyk_fill_serial(nf, dyck);
    REQUIRE(serial == kernels::cyk_fill_parallel(nf, dyck));
    CHECK(serial.has(0, dyck.size(), nf.start) == cyk_member(nf, dyck));
  }
}

TEST_CASE("cyk table cells") {
  const auto nf = to_normal_form(parse_grammar("S -> a S b | eps", Alphabet("ab")));
  const auto table = kernels::cyk_fill_serial(nf, "aabb");
  CHECK(table.length() == 4);
  CHECK(table.has(0, 4, nf.start));
  CHECK_FALSE(table.has(0, 3, nf.start));
  CHECK(table.empty(0, 3));
}
