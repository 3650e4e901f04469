#pragma once

// Data-parallel inner loops. Each kernel has a serial reference; the OpenMP
// variant must produce identical output and is checked against it in tests.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "foldsys/cfg.hpp"

namespace foldsys::kernels {

/// Fold with v over {u, d} via the up/down identity. Lengths must match.
void fold_into(std::string_view w, std::string_view v, std::string& out);

struct PairHit {
  std::string word;
  std::uint32_t core;  // index into the core list
  std::uint32_t proc;  // index into the procedure list
};

/// Distinct folds of every (core, proc) pair, sorted by word. Each word keeps
/// its smallest (core, proc) index pair as witness.
std::vector<PairHit> fold_pairs_serial(std::span<const std::string> cores, std::span<const std::string> procs);
std::vector<PairHit> fold_pairs_parallel(std::span<const std::string> cores, std::span<const std::string> procs);

/// Smallest (core, proc) index pair folding to `target`.
std::optional<std::pair<std::uint32_t, std::uint32_t>> find_fold_serial(std::string_view target,
                                                                        std::span<const std::string> cores,
                                                                        std::span<const std::string> procs);
std::optional<std::pair<std::uint32_t, std::uint32_t>> find_fold_parallel(std::string_view target,
                                                                          std::span<const std::string> cores,
                                                                          std::span<const std::string> procs);

/// Span-indexed nonterminal bitsets for CYK.
class CykTable {
 public:
  CykTable(std::size_t length, std::size_t nonterminals);

  std::size_t length() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }
  bool has(std::size_t begin, std::size_t len, std::uint32_t nt) const noexcept {
    return (cell(begin, len)[nt >> 6] >> (nt & 63)) & 1u;
  }
  bool empty(std::size_t begin, std::size_t len) const noexcept;
  const std::uint64_t* cell(std::size_t begin, std::size_t len) const noexcept {
    return bits_.data() + ((len - 1) * n_ + begin) * words_;
  }
  std::uint64_t* cell(std::size_t begin, std::size_t len) noexcept {
    return bits_.data() + ((len - 1) * n_ + begin) * words_;
  }

  friend bool operator==(const CykTable&, const CykTable&) = default;

 private:
  std::size_t n_, words_;
  std::vector<std::uint64_t> bits_;
};

CykTable cyk_fill_serial(const NormalFormGrammar& nf, std::string_view w);
CykTable cyk_fill_parallel(const NormalFormGrammar& nf, std::string_view w);

}  // namespace foldsys::kernels
