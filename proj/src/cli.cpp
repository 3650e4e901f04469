#include "foldsys/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "foldsys/family_json.hpp"
#include "foldsys/fsystem.hpp"
#include "foldsys/pumping.hpp"

namespace foldsys::cli {

namespace {

std::string shown(const std::string& w) { return w.empty() ? std::string("\"\"") : w; }

std::string join(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += ", ";
    out += shown(items[k]);
  }
  return out + "]";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Thrown for problems the user should fix on the command line.
struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string w, v;
  bool trace = false;
  std::string spec;
  std::size_t max_len = 14;
  std::string word;
  std::size_t imax = 4;
  bool json = false;
  std::string out_file;
  std::string family_file;
  std::string predicate;
  std::size_t bound = 64;
};

int cmd_fold(const Options& o, std::ostream& out) {
  if (!std::all_of(o.v.begin(), o.v.end(), [](char c) { return c == 'u' || c == 'd'; }))
    throw UsageError("procedure string must use only u and d: " + o.v);
  if (o.trace)
    out << render_trace(fold_trace(o.w, o.v));
  else
    out << fold(o.w, o.v) << '\n';
  return kOk;
}

int cmd_enum(const Options& o, std::ostream& out) {
  const FSystem phi = load_fsystem_spec(o.spec);
  for (const auto& entry : fs_enumerate(phi, o.max_len)) out << shown(entry.word) << '\n';
  return kOk;
}

int cmd_member(const Options& o, std::ostream& out) {
  const FSystem phi = load_fsystem_spec(o.spec);
  if (auto witness = fs_witness(phi, o.word)) {
    out << "yes: h(" << shown(witness->core) << ", " << shown(witness->proc) << ") = " << shown(o.word) << '\n';
    return kOk;
  }
  out << "no\n";
  return kDomainFailure;
}

void print_windows(const StrandPlan& plan, std::ostream& out) {
  out << "lemma " << to_string(plan.lemma);
  if (plan.lemma3_case) out << " (" << to_string(*plan.lemma3_case) << ")";
  out << "\n";
  out << "pair r=" << shown(plan.r) << " s=" << shown(plan.s) << "\n";
  out << "j0 = " << plan.j0 << "\n";
  out << "xi = " << join(plan.xi) << "\n";
  out << "mu = " << join(plan.mu) << "\n";
}

int cmd_pump(const Options& o, std::ostream& out, std::ostream& err) {
  const FSystem phi = load_fsystem_spec(o.spec);
  const StrandPlan plan = build_plan(phi);
  const PumpFamily family = plan_to_family(plan);
  const std::string doc = family_to_json(family);
  if (!o.out_file.empty()) {
    std::ofstream file(o.out_file);
    if (!file) throw Error("cannot write " + o.out_file);
    file << doc << '\n';
  }

  const auto plan_report = verify_plan(plan, phi, plan.j0, plan.j0 + 3);
  const auto family_report = verify_family(family, phi, 0, o.imax);
  const bool ok = plan_report.ok() && family_report.ok();
  if (o.json) {
    out << doc << '\n';
  } else {
    print_windows(plan, out);
    out << doc << '\n';
    out << "verified i=0.." << o.imax << ": " << (ok ? "PASS" : "FAIL") << '\n';
  }
  if (!ok) {
    err << "foldsys: "
        << (plan_report.ok() ? family_report.first_failure() : "plan: " + plan_report.first_failure()) << '\n';
    return kDomainFailure;
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const FSystem phi = load_fsystem_spec(o.spec);
  const PumpFamily family = family_from_json(read_file(o.family_file));
  const auto report = verify_family(family, phi, 0, o.imax);
  for (const auto& check : report.repetitions) {
    out << "i=" << check.i << " " << shown(check.word);
    if (check.ok())
      out << " = h(" << shown(check.witness->core) << ", " << shown(check.witness->proc) << ")\n";
    else
      out << " not in L(Phi)\n";
  }
  out << "verified i=0.." << o.imax << ": " << (report.ok() ? "PASS" : "FAIL") << '\n';
  if (!report.ok()) {
    err << "foldsys: " << report.first_failure() << '\n';
    return kDomainFailure;
  }
  return kOk;
}

int cmd_refute(const Options& o, std::ostream& out) {
  const auto predicate = unary_predicate(o.predicate);
  const PumpFamily family = family_from_json(read_file(o.family_file));
  const auto witness = refute_unary_family(predicate, family, o.bound);
  if (!witness) {
    out << "none up to i=" << o.bound << '\n';
    return kOk;
  }
  out << "witness i=" << *witness << " length=" << family.assemble(*witness).size() << '\n';
  return kOk;
}

}  // namespace

std::string render_trace(const FoldTrace& trace) {
  if (trace.empty()) return "(empty)\n";
  std::string out;
  for (std::size_t t = 0; t < trace.size(); ++t) {
    const auto& step = trace[t];
    out += "step " + std::to_string(t + 1) + ": fold " + (step.direction == Direction::Up ? "up" : "down") + " " +
           step.symbol + "\n";
    out += "  " + step.stack + "\n";
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"String folding and F-system toolkit", "foldsys"};
  app.require_subcommand(1);
  Options o;

  auto* fold_cmd = app.add_subcommand("fold", "Print h(w, v)");
  fold_cmd->add_option("w", o.w, "core string")->required();
  fold_cmd->add_option("v", o.v, "procedure string over u, d")->required();
  fold_cmd->add_flag("--trace", o.trace, "show every folding step");

  auto* enum_cmd = app.add_subcommand("enum", "List L(Phi) up to a length");
  enum_cmd->add_option("spec", o.spec, "F-system spec file")->required();
  enum_cmd->add_option("--max-len", o.max_len, "largest length")->capture_default_str();

  auto* member_cmd = app.add_subcommand("member", "Decide w in L(Phi)");
  member_cmd->add_option("spec", o.spec, "F-system spec file")->required();
  member_cmd->add_option("w", o.word, "word")->required();

  auto* pump_cmd = app.add_subcommand("pump", "Build and verify a pump family");
  pump_cmd->add_option("spec", o.spec, "F-system spec file")->required();
  pump_cmd->add_option("--imax", o.imax, "verify i = 0..imax")->capture_default_str();
  pump_cmd->add_flag("--json", o.json, "print only the family JSON");
  pump_cmd->add_option("--out", o.out_file, "also write the family JSON here");

  auto* verify_cmd = app.add_subcommand("verify", "Check a family against the oracle");
  verify_cmd->add_option("spec", o.spec, "F-system spec file")->required();
  verify_cmd->add_option("--family", o.family_file, "family JSON")->required();
  verify_cmd->add_option("--imax", o.imax, "verify i = 0..imax")->capture_default_str();

  auto* refute_cmd = app.add_subcommand("refute-unary", "Find i where a unary family leaves a length predicate");
  refute_cmd->add_option("--predicate", o.predicate, "primes | even")
      ->required()
      ->check(CLI::IsMember({"primes", "even"}));
  refute_cmd->add_option("--family", o.family_file, "family JSON")->required();
  refute_cmd->add_option("--bound", o.bound, "largest i tried")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "foldsys: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*fold_cmd) return cmd_fold(o, out);
    if (*enum_cmd) return cmd_enum(o, out);
    if (*member_cmd) return cmd_member(o, out);
    if (*pump_cmd) return cmd_pump(o, out, err);
    if (*verify_cmd) return cmd_verify(o, out, err);
    if (*refute_cmd) return cmd_refute(o, out);
  } catch (const UsageError& e) {
    err << "foldsys: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "foldsys: " << e.what() << '\n';
    return kUsage;
  } catch (const SymbolError& e) {
    err << "foldsys: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "foldsys: " << e.what() << '\n';
    return kDomainFailure;
  }
  return kUsage;
}

}  // namespace foldsys::cli
