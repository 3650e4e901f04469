// Serial vs OpenMP kernels. Usage: bench_kernels [reps]
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "foldsys/cfg.hpp"
#include "foldsys/kernels.hpp"

using namespace foldsys;

namespace {

std::vector<std::string> random_words(std::mt19937& rng, std::size_t count, std::size_t len, const std::string& sigma) {
  std::uniform_int_distribution<std::size_t> pick(0, sigma.size() - 1);
  std::vector<std::string> out(count, std::string(len, ' '));
  for (auto& w : out)
    for (auto& c : w) c = sigma[pick(rng)];
  return out;
}

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s %10.2f %10.2f %7.2fx  %s\n", name, serial, parallel, serial / parallel, same ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::mt19937 rng(12345);
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %10s %10s %8s\n", "kernel", "serial ms", "omp ms", "speedup");

  const auto cores = random_words(rng, 600, 12, "abc");
  const auto procs = random_words(rng, 600, 12, "du");
  std::vector<kernels::PairHit> a, b;
  const double s1 = best_of(reps, [&] { a = kernels::fold_pairs_serial(cores, procs); });
  const double p1 = best_of(reps, [&] { b = kernels::fold_pairs_parallel(cores, procs); });
  auto same_hits = [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k].word != y[k].word || x[k].core != y[k].core || x[k].proc != y[k].proc) return false;
    return true;
  };
  row("fold_pairs 600x600 n=12", s1, p1, same_hits(a, b));

  std::optional<std::pair<std::uint32_t, std::uint32_t>> fa, fb;
  const double s2 = best_of(reps, [&] { fa = kernels::find_fold_serial(cores.front(), cores, procs); });
  const double p2 = best_of(reps, [&] { fb = kernels::find_fold_parallel(cores.front(), cores, procs); });
  row("find_fold 600x600 n=12", s2, p2, fa == fb);

  const auto nf = to_normal_form(parse_grammar("S -> a S b | S S | eps", Alphabet("ab")));
  std::string w;
  for (int k = 0; k < 150; ++k) w += "aabb";
  kernels::CykTable ta(1, 1), tb(1, 1);
  const double s3 = best_of(reps, [&] { ta = kernels::cyk_fill_serial(nf, w); });
  const double p3 = best_of(reps, [&] { tb = kernels::cyk_fill_parallel(nf, w); });
  row("cyk Dyck-like n=600", s3, p3, ta == tb);
  return 0;
}
