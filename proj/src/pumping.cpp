#include "foldsys/pumping.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>

#include "foldsys/folding.hpp"

namespace foldsys {

namespace {

constexpr std::array kLemmaNames{"L1", "L2cfreg", "L2regcf", "L3"};

// Largest pumping length the pair search accepts; beyond this the length
// profiles alone would be unreasonable.
constexpr std::size_t kMaxSearchLength = std::size_t{1} << 16;

Block fixed(std::string text) { return {std::move(text), false, 0}; }
Block periodic(std::string text, std::size_t coef) { return {std::move(text), true, coef}; }

struct Segment {
  std::size_t core_block, proc_block, length;
};

struct Region {
  std::size_t begin, end;
};

Region region_of(const StrandFormula& formula, std::size_t block, std::size_t j) {
  std::size_t begin = 0;
  for (std::size_t b = 0; b < block; ++b) begin += formula[b].length_at(j);
  return {begin, begin + formula[block].length_at(j)};
}

std::string describe(const Region& r) { return "[" + std::to_string(r.begin) + ", " + std::to_string(r.end) + ")"; }

std::string repeat_windows(const std::vector<std::string>& windows, std::size_t reps) {
  std::string out;
  for (std::size_t k = 0; k < windows.size(); ++k) {
    if (k % 2 == 0) {
      out += windows[k];
    } else {
      for (std::size_t t = 0; t < reps; ++t) out += windows[k];
    }
  }
  return out;
}

void check_segments(const StrandFormula& core, const StrandFormula& proc, const std::vector<Segment>& segments) {
  auto check_side = [&](const StrandFormula& formula, bool is_core) {
    std::vector<std::size_t> assigned(formula.size(), 0);
    for (std::size_t k = 0; k < segments.size(); ++k) {
      const auto& seg = segments[k];
      const std::size_t b = is_core ? seg.core_block : seg.proc_block;
      const auto& block = formula.at(b);
      const std::size_t period = block.text.size();
      if (!block.periodic || (period == 0 ? seg.length != 0 : seg.length % period != 0))
        throw PlanError(PlanError::Kind::CaseValidationFailed,
                        "segment " + std::to_string(k + 1) + " length " + std::to_string(seg.length) +
                            " is not a multiple of the " + (is_core ? "core" : "procedure") + " block period " +
                            std::to_string(period));
      assigned[b] += seg.length;
    }
    for (std::size_t b = 0; b < formula.size(); ++b) {
      const std::size_t growth = formula[b].periodic ? formula[b].text.size() * formula[b].coef : 0;
      if (assigned[b] != growth)
        throw PlanError(PlanError::Kind::CaseValidationFailed,
                        std::string(is_core ? "core" : "procedure") + " block " + std::to_string(b) + " grows by " +
                            std::to_string(growth) + " per step but segments cover " + std::to_string(assigned[b]));
    }
  };
  check_side(core, true);
  check_side(proc, false);
}

// Chooses the smallest j0 at which every segment's insertion point fits inside
// both periodic regions, then carves the windows out of r_{j0}, r_{j0+1}.
void carve(StrandPlan& plan, const std::vector<Segment>& segments, const PlanOptions& options) {
  check_segments(plan.core_formula, plan.proc_formula, segments);
  std::string diagnostic = "no candidate j0";
  for (std::size_t j0 = 0; j0 <= options.j0_bound; ++j0) {
    const std::string r0 = plan.core_at(j0), s0 = plan.proc_at(j0);
    const std::string r1 = plan.core_at(j0 + 1), s1 = plan.proc_at(j0 + 1);
    if (r0.size() != s0.size())
      throw PlanError(PlanError::Kind::CaseValidationFailed,
                      "strand lengths differ at j=" + std::to_string(j0) + ": " + std::to_string(r0.size()) +
                          " vs " + std::to_string(s0.size()));

    std::vector<std::size_t> cuts;
    std::vector<std::string> core_pumped, proc_pumped;
    std::size_t prev = 0, shift = 0;
    bool feasible = true;
    for (std::size_t k = 0; k < segments.size(); ++k) {
      const auto& seg = segments[k];
      std::size_t cut = prev;
      if (seg.length != 0) {
        const Region cr = region_of(plan.core_formula, seg.core_block, j0);
        const Region pr = region_of(plan.proc_formula, seg.proc_block, j0);
        const std::size_t lo = std::max({prev, cr.begin, pr.begin});
        const std::size_t hi = std::min(cr.end, pr.end);
        if (lo > hi) {
          diagnostic = "window " + std::to_string(2 * k + 2) + " at j0=" + std::to_string(j0) + ": core region " +
                       describe(cr) + " and procedure region " + describe(pr) + " leave no cut at or after " +
                       std::to_string(prev);
          feasible = false;
          break;
        }
        cut = lo;
      }
      cuts.push_back(cut);
      core_pumped.push_back(r1.substr(cut + shift, seg.length));
      proc_pumped.push_back(s1.substr(cut + shift, seg.length));
      shift += seg.length;
      prev = cut;
    }
    if (!feasible) continue;

    std::vector<std::string> xi, mu;
    std::size_t from = 0;
    for (std::size_t k = 0; k < segments.size(); ++k) {
      xi.push_back(r0.substr(from, cuts[k] - from));
      mu.push_back(s0.substr(from, cuts[k] - from));
      xi.push_back(core_pumped[k]);
      mu.push_back(proc_pumped[k]);
      from = cuts[k];
    }
    xi.push_back(r0.substr(from));
    mu.push_back(s0.substr(from));

    bool rebuilt = true;
    for (std::size_t j = j0; j <= j0 + 3 && rebuilt; ++j) {
      if (repeat_windows(xi, j - j0) != plan.core_at(j) || repeat_windows(mu, j - j0) != plan.proc_at(j)) {
        diagnostic = "windows at j0=" + std::to_string(j0) + " do not rebuild the strands at j=" + std::to_string(j);
        rebuilt = false;
      }
    }
    if (!rebuilt) continue;

    plan.j0 = j0;
    plan.xi = std::move(xi);
    plan.mu = std::move(mu);
    plan.cuts = std::move(cuts);
    return;
  }
  throw PlanError(PlanError::Kind::CaseValidationFailed,
                  "no j0 <= " + std::to_string(options.j0_bound) + " works; last failure: " + diagnostic);
}

void require_kinds(const FSystem& phi, LanguageSpec::Kind core, LanguageSpec::Kind proc, const char* who) {
  if (phi.core().kind() != core || phi.proc().kind() != proc)
    throw PreconditionError(std::string(who) + " needs a " + to_string(core) + " core and a " + to_string(proc) +
                            " procedure language");
}

// The (r, s) every construction starts from: the first common length at or
// above both pumping lengths.
Witness pick_pair(const FSystem& phi, const PlanOptions& options) {
  if (!phi.core().is_infinite())
    throw PlanError(PlanError::Kind::FiniteComponent, "the core language is finite, so L(Phi) is finite");
  if (!phi.proc().is_infinite())
    throw PlanError(PlanError::Kind::FiniteComponent, "the procedure language is finite, so L(Phi) is finite");
  const std::size_t p = std::max(phi.core().pumping_length(), phi.proc().pumping_length());
  if (p > kMaxSearchLength)
    throw ResourceLimitExceeded("pumping length " + std::to_string(p) + " is too large to search for a pair");
  try {
    return equal_length_pair(phi, p, p + options.length_span);
  } catch (const NotFound&) {
    throw PlanError(PlanError::Kind::NoEqualLengthPair,
                    "no length in [" + std::to_string(p) + ", " + std::to_string(p + options.length_span) +
                        "] is shared by both components");
  }
}

RegDecomposition decompose_regular(const LanguageSpec& lang, std::string_view w) {
  return reg_decompose(lang.as_regular()->automaton(), w);
}

CfgDecomposition decompose_cf(const LanguageSpec& lang, std::string_view w) {
  return cfg_decompose(lang.as_context_free()->normal_form(), w);
}

StrandPlan start_plan(LemmaKind lemma, const Witness& pair) {
  StrandPlan plan;
  plan.lemma = lemma;
  plan.r = pair.core;
  plan.s = pair.proc;
  return plan;
}

}  // namespace

const char* to_string(LemmaKind kind) noexcept { return kLemmaNames[static_cast<std::size_t>(kind)]; }

std::optional<LemmaKind> lemma_from_string(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kLemmaNames.size(); ++i)
    if (name == kLemmaNames[i]) return static_cast<LemmaKind>(i);
  return std::nullopt;
}

const char* to_string(Lemma3Case c) noexcept {
  switch (c) {
    case Lemma3Case::Greater: return "greater";
    case Lemma3Case::Less: return "less";
    case Lemma3Case::EqualNonzero: return "equal-nonzero";
    case Lemma3Case::VDegenerate: return "v-degenerate";
    case Lemma3Case::YDegenerate: return "y-degenerate";
  }
  return "?";
}

Lemma3Case select_lemma3_case(const CfgDecomposition& core, const CfgDecomposition& proc) noexcept {
  if (core.v.empty() && proc.v.empty()) return Lemma3Case::VDegenerate;
  if (core.y.empty() && proc.y.empty()) return Lemma3Case::YDegenerate;
  const std::size_t a = core.v.size() * proc.y.size();
  const std::size_t b = proc.v.size() * core.y.size();
  if (a > b) return Lemma3Case::Greater;
  if (a < b) return Lemma3Case::Less;
  return Lemma3Case::EqualNonzero;
}

PlanError::PlanError(Kind kind, const std::string& detail)
    : Error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

const char* to_string(PlanError::Kind kind) noexcept {
  switch (kind) {
    case PlanError::Kind::NoEqualLengthPair: return "NoEqualLengthPair";
    case PlanError::Kind::FiniteComponent: return "FiniteComponent";
    case PlanError::Kind::CaseValidationFailed: return "CaseValidationFailed";
  }
  return "?";
}

std::string materialize(const StrandFormula& formula, std::size_t j) {
  std::string out;
  for (const auto& block : formula) {
    if (!block.periodic) {
      out += block.text;
      continue;
    }
    for (std::size_t t = 0; t < block.coef * j + 1; ++t) out += block.text;
  }
  return out;
}

std::vector<std::size_t> StrandPlan::pumped_window_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k < xi.size(); k += 2) out.push_back(k);
  return out;
}

bool StrandPlan::embed_in_13() const noexcept {
  return lemma == LemmaKind::L3 && lemma3_case &&
         (*lemma3_case == Lemma3Case::VDegenerate || *lemma3_case == Lemma3Case::YDegenerate);
}

std::string StrandPlan::core_from_windows(std::size_t j) const {
  if (j < j0) throw PreconditionError("j=" + std::to_string(j) + " is below j0=" + std::to_string(j0));
  return repeat_windows(xi, j - j0);
}

std::string StrandPlan::proc_from_windows(std::size_t j) const {
  if (j < j0) throw PreconditionError("j=" + std::to_string(j) + " is below j0=" + std::to_string(j0));
  return repeat_windows(mu, j - j0);
}

StrandPlan lemma1_plan(const FSystem& phi, const PlanOptions& options) {
  require_kinds(phi, LanguageSpec::Kind::Regular, LanguageSpec::Kind::Regular, "lemma1_plan");
  StrandPlan plan = start_plan(LemmaKind::L1, pick_pair(phi, options));
  const auto dr = decompose_regular(phi.core(), plan.r);
  const auto ds = decompose_regular(phi.proc(), plan.s);
  plan.core_decomposition = dr;
  plan.proc_decomposition = ds;
  plan.core_formula = {fixed(dr.x), periodic(dr.y, ds.y.size()), fixed(dr.z)};
  plan.proc_formula = {fixed(ds.x), periodic(ds.y, dr.y.size()), fixed(ds.z)};
  carve(plan, {{1, 1, dr.y.size() * ds.y.size()}}, options);
  return plan;
}

StrandPlan lemma2_plan_cf_reg(const FSystem& phi, const PlanOptions& options) {
  require_kinds(phi, LanguageSpec::Kind::ContextFree, LanguageSpec::Kind::Regular, "lemma2_plan_cf_reg");
  StrandPlan plan = start_plan(LemmaKind::L2CfReg, pick_pair(phi, options));
  const auto dr = decompose_cf(phi.core(), plan.r);
  const auto ds = decompose_regular(phi.proc(), plan.s);
  plan.core_decomposition = dr;
  plan.proc_decomposition = ds;
  const std::size_t ys = ds.y.size();
  plan.core_formula = {fixed(dr.u), periodic(dr.v, ys), fixed(dr.x), periodic(dr.y, ys), fixed(dr.z)};
  plan.proc_formula = {fixed(ds.x), periodic(ds.y, dr.v.size() + dr.y.size()), fixed(ds.z)};
  carve(plan, {{1, 1, dr.v.size() * ys}, {3, 1, dr.y.size() * ys}}, options);
  return plan;
}

StrandPlan lemma2_plan_reg_cf(const FSystem& phi, const PlanOptions& options) {
  require_kinds(phi, LanguageSpec::Kind::Regular, LanguageSpec::Kind::ContextFree, "lemma2_plan_reg_cf");
  StrandPlan plan = start_plan(LemmaKind::L2RegCf, pick_pair(phi, options));
  const auto dr = decompose_regular(phi.core(), plan.r);
  const auto ds = decompose_cf(phi.proc(), plan.s);
  plan.core_decomposition = dr;
  plan.proc_decomposition = ds;
  const std::size_t yr = dr.y.size();
  plan.core_formula = {fixed(dr.x), periodic(dr.y, ds.v.size() + ds.y.size()), fixed(dr.z)};
  plan.proc_formula = {fixed(ds.u), periodic(ds.v, yr), fixed(ds.x), periodic(ds.y, yr), fixed(ds.z)};
  carve(plan, {{1, 1, yr * ds.v.size()}, {1, 3, yr * ds.y.size()}}, options);
  return plan;
}

StrandPlan lemma3_plan(const FSystem& phi, const PlanOptions& options) {
  require_kinds(phi, LanguageSpec::Kind::ContextFree, LanguageSpec::Kind::ContextFree, "lemma3_plan");
  StrandPlan plan = start_plan(LemmaKind::L3, pick_pair(phi, options));
  const auto dr = decompose_cf(phi.core(), plan.r);
  const auto ds = decompose_cf(phi.proc(), plan.s);
  plan.core_decomposition = dr;
  plan.proc_decomposition = ds;
  const Lemma3Case branch = select_lemma3_case(dr, ds);
  plan.lemma3_case = branch;

  const std::size_t vr = dr.v.size(), yr = dr.y.size(), vs = ds.v.size(), ys = ds.y.size();
  switch (branch) {
    case Lemma3Case::VDegenerate:
      plan.core_formula = {fixed(dr.u + dr.x), periodic(dr.y, ys), fixed(dr.z)};
      plan.proc_formula = {fixed(ds.u + ds.x), periodic(ds.y, yr), fixed(ds.z)};
      carve(plan, {{1, 1, yr * ys}}, options);
      return plan;
    case Lemma3Case::YDegenerate:
      plan.core_formula = {fixed(dr.u), periodic(dr.v, vs), fixed(dr.x + dr.z)};
      plan.proc_formula = {fixed(ds.u), periodic(ds.v, vr), fixed(ds.x + ds.z)};
      carve(plan, {{1, 1, vr * vs}}, options);
      return plan;
    case Lemma3Case::Greater:
    case Lemma3Case::EqualNonzero:
    case Lemma3Case::Less:
      break;
  }

  // Both strands grow by scale * |v_r y_r| * |v_s y_s| per step.
  const bool core_leads = branch != Lemma3Case::Less;
  const std::size_t scale = core_leads ? vr * ys : vs * yr;
  const std::size_t c = scale * (vs + ys);
  const std::size_t d = scale * (vr + yr);
  plan.core_formula = {fixed(dr.u), periodic(dr.v, c), fixed(dr.x), periodic(dr.y, c), fixed(dr.z)};
  plan.proc_formula = {fixed(ds.u), periodic(ds.v, d), fixed(ds.x), periodic(ds.y, d), fixed(ds.z)};
  if (core_leads)
    carve(plan, {{1, 1, vs * d}, {1, 3, vr * c - vs * d}, {3, 3, yr * c}}, options);
  else
    carve(plan, {{1, 1, vr * c}, {3, 1, vs * d - vr * c}, {3, 3, ys * d}}, options);
  return plan;
}

LemmaKind select_lemma(const FSystem& phi) noexcept {
  const bool core_cf = phi.core().kind() == LanguageSpec::Kind::ContextFree;
  const bool proc_cf = phi.proc().kind() == LanguageSpec::Kind::ContextFree;
  if (core_cf && proc_cf) return LemmaKind::L3;
  if (core_cf) return LemmaKind::L2CfReg;
  if (proc_cf) return LemmaKind::L2RegCf;
  return LemmaKind::L1;
}

StrandPlan build_plan(const FSystem& phi, const PlanOptions& options) {
  switch (select_lemma(phi)) {
    case LemmaKind::L1: return lemma1_plan(phi, options);
    case LemmaKind::L2CfReg: return lemma2_plan_cf_reg(phi, options);
    case LemmaKind::L2RegCf: return lemma2_plan_reg_cf(phi, options);
    case LemmaKind::L3: return lemma3_plan(phi, options);
  }
  return lemma1_plan(phi, options);
}

std::string PumpFamily::assemble(std::size_t i) const {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const bool is_pumped = std::binary_search(pumped.begin(), pumped.end(), k);
    const std::size_t reps = is_pumped ? i : 1;
    for (std::size_t t = 0; t < reps; ++t) out += parts[k];
  }
  return out;
}

std::size_t PumpFamily::pumped_length() const noexcept {
  std::size_t total = 0;
  for (auto k : pumped)
    if (k < parts.size()) total += parts[k].size();
  return total;
}

PumpFamily plan_to_family(const StrandPlan& plan) {
  const std::size_t m = plan.xi.size();
  std::vector<std::string> up(m), down(m);
  for (std::size_t k = 0; k < m; ++k) {
    auto split = split_updown(plan.xi[k], plan.mu[k]);
    up[k] = std::string(split.up.rbegin(), split.up.rend());
    down[k] = std::move(split.down);
  }
  PumpFamily family;
  family.lemma = plan.lemma;
  family.j0 = plan.j0;
  for (std::size_t k = m; k-- > 1;) family.parts.push_back(up[k]);
  family.parts.push_back(up[0] + down[0]);
  for (std::size_t k = 1; k < m; ++k) family.parts.push_back(down[k]);
  for (std::size_t k = 1; k < m; k += 2) {
    family.pumped.push_back(m - 1 - k);
    family.pumped.push_back(m - 1 + k);
  }
  std::sort(family.pumped.begin(), family.pumped.end());

  if (plan.embed_in_13() && m == 3) {
    const auto& p = family.parts;
    family.parts = {p[0], p[1], "", "", "", "", p[2], "", "", "", "", p[3], p[4]};
    family.pumped = {1, 3, 5, 7, 9, 11};
  }
  return family;
}

bool VerificationReport::ok() const noexcept {
  if (!failure.empty()) return false;
  for (const auto& c : strands)
    if (!c.ok) return false;
  for (const auto& c : repetitions)
    if (!c.ok()) return false;
  return true;
}

std::string VerificationReport::first_failure() const {
  if (!failure.empty()) return failure;
  for (const auto& c : strands)
    if (!c.ok) return "j=" + std::to_string(c.j) + ": " + c.failure;
  for (const auto& c : repetitions)
    if (!c.ok()) return "i=" + std::to_string(c.i) + ": " + c.failure;
  return {};
}

VerificationReport verify_plan(const StrandPlan& plan, const FSystem& phi, std::size_t j_first, std::size_t j_last) {
  VerificationReport report;
  if (plan.xi.size() != plan.mu.size() || plan.xi.size() % 2 == 0) {
    report.failure = "plan has " + std::to_string(plan.xi.size()) + " core and " + std::to_string(plan.mu.size()) +
                     " procedure windows";
    return report;
  }
  for (std::size_t k = 0; k < plan.xi.size(); ++k) {
    if (plan.xi[k].size() != plan.mu[k].size()) {
      report.failure = "window " + std::to_string(k + 1) + " has |xi|=" + std::to_string(plan.xi[k].size()) +
                       " but |mu|=" + std::to_string(plan.mu[k].size());
      return report;
    }
  }
  for (std::size_t j = j_first; j <= j_last; ++j) {
    StrandCheck check;
    check.j = j;
    if (j < plan.j0) {
      check.failure = "below j0=" + std::to_string(plan.j0);
      report.strands.push_back(std::move(check));
      continue;
    }
    check.core = plan.core_from_windows(j);
    check.proc = plan.proc_from_windows(j);
    if (check.core != plan.core_at(j))
      check.failure = "core windows give " + check.core + ", formula gives " + plan.core_at(j);
    else if (check.proc != plan.proc_at(j))
      check.failure = "procedure windows give " + check.proc + ", formula gives " + plan.proc_at(j);
    else if (!phi.core().member(check.core))
      check.failure = check.core + " is not in the core language";
    else if (!phi.proc().member(check.proc))
      check.failure = check.proc + " is not in the procedure language";
    else
      check.ok = true;
    report.strands.push_back(std::move(check));
  }
  return report;
}

VerificationReport verify_family(const PumpFamily& family, const FSystem& phi, std::size_t i_first,
                                 std::size_t i_last, const OracleLimits& limits) {
  VerificationReport report;
  if (family.pumped_length() == 0) {
    report.failure = "total pumped length is 0";
    return report;
  }
  for (std::size_t i = i_first; i <= i_last; ++i) {
    RepetitionCheck check;
    check.i = i;
    check.word = family.assemble(i);
    check.witness = fs_witness(phi, check.word, limits);
    if (!check.witness) check.failure = "\"" + check.word + "\" is not in L(Phi)";
    report.repetitions.push_back(std::move(check));
  }
  return report;
}

bool is_prime(std::size_t n) noexcept {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

LengthPredicate unary_predicate(std::string_view name) {
  if (name == "primes") return [](std::size_t n) { return is_prime(n); };
  if (name == "even") return [](std::size_t n) { return n % 2 == 0; };
  throw PreconditionError("unknown predicate '" + std::string(name) + "' (expected primes or even)");
}

std::optional<std::size_t> refute_unary_family(const LengthPredicate& predicate, const PumpFamily& family,
                                               std::size_t bound) {
  std::set<char> symbols;
  for (const auto& part : family.parts) symbols.insert(part.begin(), part.end());
  if (symbols.size() > 1) throw PreconditionError("family is not unary: it uses " + std::to_string(symbols.size()) + " symbols");
  std::size_t total = 0;
  for (const auto& part : family.parts) total += part.size();
  const std::size_t pumped = family.pumped_length();
  const std::size_t base = total - pumped;
  for (std::size_t i = 0; i <= bound; ++i)
    if (!predicate(base + i * pumped)) return i;
  return std::nullopt;
}

}  // namespace foldsys
