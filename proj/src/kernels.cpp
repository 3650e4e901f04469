#include "foldsys/kernels.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <unordered_map>

#include <omp.h>

#include "foldsys/errors.hpp"

namespace foldsys::kernels {

namespace {

using Witness = std::pair<std::uint32_t, std::uint32_t>;

std::array<std::uint32_t, 256> histogram(std::string_view w) {
  std::array<std::uint32_t, 256> h{};
  for (char c : w) ++h[static_cast<unsigned char>(c)];
  return h;
}

void set_bit(std::uint64_t* cell, std::uint32_t nt) { cell[nt >> 6] |= std::uint64_t{1} << (nt & 63); }
bool get_bit(const std::uint64_t* cell, std::uint32_t nt) { return (cell[nt >> 6] >> (nt & 63)) & 1u; }

bool all_zero(const std::uint64_t* cell, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if (cell[i]) return false;
  return true;
}

void fill_base(const NormalFormGrammar& nf, std::string_view w, CykTable& table) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (const auto& rule : nf.terminal)
      if (rule.symbol == w[i]) set_bit(table.cell(i, 1), rule.lhs);
}

void fill_cell(const NormalFormGrammar& nf, CykTable& table, std::size_t begin, std::size_t len) {
  std::uint64_t* target = table.cell(begin, len);
  const std::size_t words = table.words();
  for (std::size_t split = 1; split < len; ++split) {
    const std::uint64_t* left = table.cell(begin, split);
    const std::uint64_t* right = table.cell(begin + split, len - split);
    if (all_zero(left, words) || all_zero(right, words)) continue;
    for (const auto& rule : nf.binary)
      if (get_bit(left, rule.left) && get_bit(right, rule.right)) set_bit(target, rule.lhs);
  }
}

}  // namespace

void fold_into(std::string_view w, std::string_view v, std::string& out) {
  if (w.size() != v.size()) throw UndefinedFold(w.size(), v.size());
  out.resize(w.size());
  const auto ups = static_cast<std::size_t>(std::count(v.begin(), v.end(), 'u'));
  std::size_t up_slot = ups, down_slot = ups;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (v[i] == 'u')
      out[--up_slot] = w[i];
    else
      out[down_slot++] = w[i];
  }
}

std::vector<PairHit> fold_pairs_serial(std::span<const std::string> cores, std::span<const std::string> procs) {
  std::map<std::string, Witness> found;
  std::string scratch;
  for (std::uint32_t r = 0; r < cores.size(); ++r)
    for (std::uint32_t s = 0; s < procs.size(); ++s) {
      fold_into(cores[r], procs[s], scratch);
      found.try_emplace(scratch, r, s);
    }
  std::vector<PairHit> out;
  out.reserve(found.size());
  for (auto& [word, witness] : found) out.push_back({word, witness.first, witness.second});
  return out;
}

std::vector<PairHit> fold_pairs_parallel(std::span<const std::string> cores, std::span<const std::string> procs) {
  const auto core_count = static_cast<std::int64_t>(cores.size());
  std::vector<std::unordered_map<std::string, Witness>> partial(static_cast<std::size_t>(omp_get_max_threads()));

#pragma omp parallel
  {
    auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
    std::string scratch;
#pragma omp for schedule(static)
    for (std::int64_t r = 0; r < core_count; ++r) {
      for (std::uint32_t s = 0; s < procs.size(); ++s) {
        fold_into(cores[static_cast<std::size_t>(r)], procs[s], scratch);
        Witness candidate{static_cast<std::uint32_t>(r), s};
        auto [it, inserted] = local.try_emplace(scratch, candidate);
        if (!inserted && candidate < it->second) it->second = candidate;
      }
    }
  }

  std::map<std::string, Witness> merged;
  for (auto& local : partial)
    for (auto& [word, witness] : local) {
      auto [it, inserted] = merged.try_emplace(word, witness);
      if (!inserted && witness < it->second) it->second = witness;
    }
  std::vector<PairHit> out;
  out.reserve(merged.size());
  for (auto& [word, witness] : merged) out.push_back({word, witness.first, witness.second});
  return out;
}

std::optional<Witness> find_fold_serial(std::string_view target, std::span<const std::string> cores,
                                        std::span<const std::string> procs) {
  const auto want = histogram(target);
  std::string scratch;
  for (std::uint32_t r = 0; r < cores.size(); ++r) {
    if (cores[r].size() != target.size() || histogram(cores[r]) != want) continue;
    for (std::uint32_t s = 0; s < procs.size(); ++s) {
      fold_into(cores[r], procs[s], scratch);
      if (scratch == target) return Witness{r, s};
    }
  }
  return std::nullopt;
}

std::optional<Witness> find_fold_parallel(std::string_view target, std::span<const std::string> cores,
                                          std::span<const std::string> procs) {
  const auto want = histogram(target);
  const auto core_count = static_cast<std::int64_t>(cores.size());
  constexpr std::uint64_t kNone = ~std::uint64_t{0};
  std::uint64_t best = kNone;  // core index << 32 | proc index

#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
  for (std::int64_t r = 0; r < core_count; ++r) {
    const auto& core = cores[static_cast<std::size_t>(r)];
    if (core.size() != target.size() || histogram(core) != want) continue;
    std::string scratch;
    for (std::uint32_t s = 0; s < procs.size(); ++s) {
      fold_into(core, procs[s], scratch);
      if (scratch == target) {
        best = std::min(best, (static_cast<std::uint64_t>(r) << 32) | s);
        break;
      }
    }
  }
  if (best == kNone) return std::nullopt;
  return Witness{static_cast<std::uint32_t>(best >> 32), static_cast<std::uint32_t>(best & 0xffffffffu)};
}

CykTable::CykTable(std::size_t length, std::size_t nonterminals)
    : n_(length), words_(std::max<std::size_t>(1, (nonterminals + 63) / 64)), bits_(length * length * words_, 0) {}

bool CykTable::empty(std::size_t begin, std::size_t len) const noexcept { return all_zero(cell(begin, len), words_); }

CykTable cyk_fill_serial(const NormalFormGrammar& nf, std::string_view w) {
  CykTable table(w.size(), nf.nonterminal_count());
  fill_base(nf, w, table);
  for (std::size_t len = 2; len <= w.size(); ++len)
    for (std::size_t begin = 0; begin + len <= w.size(); ++begin) fill_cell(nf, table, begin, len);
  return table;
}

CykTable cyk_fill_parallel(const NormalFormGrammar& nf, std::string_view w) {
  CykTable table(w.size(), nf.nonterminal_count());
  fill_base(nf, w, table);
  const auto n = static_cast<std::int64_t>(w.size());
  for (std::int64_t len = 2; len <= n; ++len) {
    // cells of one span length only read shorter spans
#pragma omp parallel for schedule(dynamic, 16) if (n - len >= 64)
    for (std::int64_t begin = 0; begin <= n - len; ++begin)
      fill_cell(nf, table, static_cast<std::size_t>(begin), static_cast<std::size_t>(len));
  }
  return table;
}

}  // namespace foldsys::kernels
