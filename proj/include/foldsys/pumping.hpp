#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "foldsys/errors.hpp"
#include "foldsys/fsystem.hpp"

namespace foldsys {

enum class LemmaKind { L1, L2CfReg, L2RegCf, L3 };
/// "L1", "L2cfreg", "L2regcf", "L3".
const char* to_string(LemmaKind kind) noexcept;
std::optional<LemmaKind> lemma_from_string(std::string_view name) noexcept;

enum class Lemma3Case { Greater, Less, EqualNonzero, VDegenerate, YDegenerate };
const char* to_string(Lemma3Case c) noexcept;

/// The CF/CF branch for a pair of decompositions; total over all inputs with
/// |v y| > 0 on both sides.
Lemma3Case select_lemma3_case(const CfgDecomposition& core, const CfgDecomposition& proc) noexcept;

class PlanError : public Error {
 public:
  enum class Kind { NoEqualLengthPair, FiniteComponent, CaseValidationFailed };
  PlanError(Kind kind, const std::string& detail);
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};
const char* to_string(PlanError::Kind kind) noexcept;

/// One block of a strand formula: `text` itself, or text^(coef*j + 1).
struct Block {
  std::string text;
  bool periodic = false;
  std::size_t coef = 0;

  std::size_t length_at(std::size_t j) const noexcept {
    return periodic ? text.size() * (coef * j + 1) : text.size();
  }
};
using StrandFormula = std::vector<Block>;

std::string materialize(const StrandFormula& formula, std::size_t j);

using Decomposition = std::variant<RegDecomposition, CfgDecomposition>;

/// Aligned windows ξ over the core strand and μ over the procedure strand.
/// r_j = ξ1 ξ2^(j-j0) ξ3 ... and likewise for s_j with μ.
struct StrandPlan {
  LemmaKind lemma = LemmaKind::L1;
  std::optional<Lemma3Case> lemma3_case;
  std::string r, s;  // the equal-length pair that was decomposed
  Decomposition core_decomposition, proc_decomposition;
  StrandFormula core_formula, proc_formula;
  std::size_t j0 = 0;
  std::vector<std::string> xi, mu;
  std::vector<std::size_t> cuts;  // window boundaries in r_{j0} (= s_{j0})

  std::size_t window_count() const noexcept { return xi.size(); }
  /// 0-based indices of ξ2, ξ4, ...
  std::vector<std::size_t> pumped_window_indices() const;
  /// Degenerate CF/CF plans have three windows but map to a 13-part family.
  bool embed_in_13() const noexcept;

  std::string core_at(std::size_t j) const { return materialize(core_formula, j); }
  std::string proc_at(std::size_t j) const { return materialize(proc_formula, j); }
  /// Rebuilt from the windows; requires j >= j0.
  std::string core_from_windows(std::size_t j) const;
  std::string proc_from_windows(std::size_t j) const;
};

struct PlanOptions {
  std::size_t j0_bound = 64;
  /// Lengths searched for (r, s): [max(p1, p2), max(p1, p2) + length_span].
  std::size_t length_span = 256;
};

StrandPlan lemma1_plan(const FSystem& phi, const PlanOptions& options = {});
StrandPlan lemma2_plan_cf_reg(const FSystem& phi, const PlanOptions& options = {});
StrandPlan lemma2_plan_reg_cf(const FSystem& phi, const PlanOptions& options = {});
StrandPlan lemma3_plan(const FSystem& phi, const PlanOptions& options = {});

LemmaKind select_lemma(const FSystem& phi) noexcept;
StrandPlan build_plan(const FSystem& phi, const PlanOptions& options = {});

struct PumpFamily {
  std::vector<std::string> parts;
  std::vector<std::size_t> pumped;  // 0-based, ascending
  LemmaKind lemma = LemmaKind::L1;
  std::size_t j0 = 0;

  std::string assemble(std::size_t i) const;
  std::size_t pumped_length() const noexcept;

  friend bool operator==(const PumpFamily&, const PumpFamily&) = default;
};

PumpFamily plan_to_family(const StrandPlan& plan);

struct StrandCheck {
  std::size_t j = 0;
  std::string core, proc;
  bool ok = false;
  std::string failure;
};

struct RepetitionCheck {
  std::size_t i = 0;
  std::string word;
  std::optional<Witness> witness;
  std::string failure;
  bool ok() const noexcept { return witness.has_value(); }
};

struct VerificationReport {
  std::vector<StrandCheck> strands;
  std::vector<RepetitionCheck> repetitions;
  std::string failure;  // whole-object failure, e.g. zero pumped length

  bool ok() const noexcept;
  /// First failure message, or empty.
  std::string first_failure() const;
};

VerificationReport verify_plan(const StrandPlan& plan, const FSystem& phi, std::size_t j_first, std::size_t j_last);
VerificationReport verify_family(const PumpFamily& family, const FSystem& phi, std::size_t i_first,
                                 std::size_t i_last, const OracleLimits& limits = {});

using LengthPredicate = std::function<bool(std::size_t)>;
bool is_prime(std::size_t n) noexcept;
/// "primes" or "even"; throws PreconditionError otherwise.
LengthPredicate unary_predicate(std::string_view name);

/// Smallest i in [0, bound] with predicate(|pumped(i)|) false. The family
/// must use at most one symbol.
std::optional<std::size_t> refute_unary_family(const LengthPredicate& predicate, const PumpFamily& family,
                                               std::size_t bound);

}  // namespace foldsys
