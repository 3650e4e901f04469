#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "foldsys/language.hpp"

namespace foldsys {

/// Guards for the exhaustive oracle. Exceeding either is reported as
/// ResourceLimitExceeded.
struct OracleLimits {
  std::size_t max_pairs_per_length = std::size_t{1} << 22;
  std::size_t max_strings_per_length = kDefaultEnumerationLimit;
  bool parallel = true;
};

/// Φ = (L1, L2): a core language over Σ and a procedure language over {u, d}.
class FSystem {
 public:
  /// Throws SymbolError unless the procedure alphabet is exactly {d, u}.
  FSystem(LanguageSpec core, LanguageSpec proc);

  const LanguageSpec& core() const noexcept { return core_; }
  const LanguageSpec& proc() const noexcept { return proc_; }

 private:
  LanguageSpec core_;
  LanguageSpec proc_;
};

struct Witness {
  std::string core, proc;
};

struct FsWord {
  std::string word;
  Witness witness;
};

/// { h(r, s) : r ∈ L1, s ∈ L2, |r| = |s| <= max_len }, sorted by (length, lex).
std::vector<FsWord> fs_enumerate(const FSystem& phi, std::size_t max_len, const OracleLimits& limits = {});

/// Smallest witnessing pair for `w`, if any.
std::optional<Witness> fs_witness(const FSystem& phi, std::string_view w, const OracleLimits& limits = {});
bool fs_member(const FSystem& phi, std::string_view w, const OracleLimits& limits = {});

/// Smallest n in [min_len, max_len] at which both components have members,
/// with the lexicographically smallest member of each. Throws NotFound.
Witness equal_length_pair(const FSystem& phi, std::size_t min_len, std::size_t max_len);

/// (W, d*) for a finite word set W, so that L(Φ) = W.
FSystem finite_language_system(const Alphabet& alphabet, std::span<const std::string> words);

/// Line-oriented description:
///   alphabet = a b
///   core.kind = regex | cfg
///   core.regex = ...            (kind = regex)
///   core.cfg = A -> ... | eps   (kind = cfg, one production group per line)
///   proc.kind / proc.regex / proc.cfg likewise, over the implicit {u, d}
/// `#` starts a comment. Errors are ParseError with the 1-based line number.
FSystem parse_fsystem_spec(std::string_view text);
FSystem load_fsystem_spec(const std::filesystem::path& path);

}  // namespace foldsys
