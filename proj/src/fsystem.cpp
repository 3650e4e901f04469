#include "foldsys/fsystem.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "foldsys/errors.hpp"
#include "foldsys/kernels.hpp"

namespace foldsys {

namespace {

void guard_pairs(std::size_t cores, std::size_t procs, std::size_t n, const OracleLimits& limits) {
  if (cores != 0 && procs > limits.max_pairs_per_length / cores)
    throw ResourceLimitExceeded("length " + std::to_string(n) + " has " + std::to_string(cores) + " x " +
                                std::to_string(procs) + " candidate pairs (limit " +
                                std::to_string(limits.max_pairs_per_length) + ")");
}

std::string trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

FSystem::FSystem(LanguageSpec core, LanguageSpec proc) : core_(std::move(core)), proc_(std::move(proc)) {
  if (!(proc_.alphabet() == Alphabet::directions()))
    throw SymbolError("procedure language must be over {d, u}, got {" + proc_.alphabet().symbols() + "}");
}

std::vector<FsWord> fs_enumerate(const FSystem& phi, std::size_t max_len, const OracleLimits& limits) {
  const auto core_profile = phi.core().length_profile(max_len);
  const auto proc_profile = phi.proc().length_profile(max_len);
  std::vector<FsWord> out;
  for (std::size_t n = 0; n <= max_len; ++n) {
    if (!core_profile[n] || !proc_profile[n]) continue;
    const auto cores = phi.core().enumerate_length(n, limits.max_strings_per_length);
    const auto procs = phi.proc().enumerate_length(n, limits.max_strings_per_length);
    guard_pairs(cores.size(), procs.size(), n, limits);
    auto hits = limits.parallel ? kernels::fold_pairs_parallel(cores, procs) : kernels::fold_pairs_serial(cores, procs);
    for (auto& hit : hits) out.push_back({std::move(hit.word), {cores[hit.core], procs[hit.proc]}});
  }
  return out;
}

std::optional<Witness> fs_witness(const FSystem& phi, std::string_view w, const OracleLimits& limits) {
  if (!phi.core().alphabet().contains_all(w)) return std::nullopt;
  const std::size_t n = w.size();
  auto cores = phi.core().enumerate_length(n, limits.max_strings_per_length);
  if (cores.empty()) return std::nullopt;
  // only permutations of w can fold to w
  std::string sorted_w(w);
  std::sort(sorted_w.begin(), sorted_w.end());
  std::erase_if(cores, [&](std::string r) {
    std::sort(r.begin(), r.end());
    return r != sorted_w;
  });
  if (cores.empty()) return std::nullopt;
  const auto procs = phi.proc().enumerate_length(n, limits.max_strings_per_length);
  guard_pairs(cores.size(), procs.size(), n, limits);
  auto hit = limits.parallel ? kernels::find_fold_parallel(w, cores, procs) : kernels::find_fold_serial(w, cores, procs);
  if (!hit) return std::nullopt;
  return Witness{cores[hit->first], procs[hit->second]};
}

bool fs_member(const FSystem& phi, std::string_view w, const OracleLimits& limits) {
  return fs_witness(phi, w, limits).has_value();
}

Witness equal_length_pair(const FSystem& phi, std::size_t min_len, std::size_t max_len) {
  if (min_len <= max_len) {
    const auto core_profile = phi.core().length_profile(max_len);
    const auto proc_profile = phi.proc().length_profile(max_len);
    for (std::size_t n = min_len; n <= max_len; ++n)
      if (core_profile[n] && proc_profile[n])
        return {*phi.core().smallest_of_length(n), *phi.proc().smallest_of_length(n)};
  }
  throw NotFound("NoEqualLengthPair: no length in [" + std::to_string(min_len) + ", " + std::to_string(max_len) +
                 "] is shared by the core and procedure languages");
}

FSystem finite_language_system(const Alphabet& alphabet, std::span<const std::string> words) {
  std::string regex;
  for (const auto& w : words) {
    alphabet.check(w);
    if (!regex.empty()) regex += '|';
    regex += w.empty() ? std::string("()") : w;
  }
  if (regex.empty()) regex = "[]";
  return FSystem(LanguageSpec::regular(alphabet, regex), LanguageSpec::regular(Alphabet::directions(), "d*"));
}

FSystem parse_fsystem_spec(std::string_view text) {
  std::map<std::string, std::pair<std::string, std::size_t>> single;  // key -> (value, line)
  std::string core_cfg, proc_cfg;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("line " + std::to_string(line_no) + ": expected key = value", line_no);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "core.cfg") {
      core_cfg += value + "\n";
    } else if (key == "proc.cfg") {
      proc_cfg += value + "\n";
    } else if (key == "proc.alphabet") {
      throw ParseError("line " + std::to_string(line_no) + ": the procedure alphabet is implicitly {u, d}", line_no);
    } else if (key == "alphabet" || key == "core.kind" || key == "core.regex" || key == "proc.kind" ||
               key == "proc.regex") {
      if (!single.emplace(key, std::make_pair(value, line_no)).second)
        throw ParseError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'", line_no);
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + key + "'", line_no);
    }
  }

  auto require = [&](const std::string& key) -> const std::pair<std::string, std::size_t>& {
    auto it = single.find(key);
    if (it == single.end()) throw ParseError("missing key '" + key + "'", line_no);
    return it->second;
  };
  const Alphabet sigma(require("alphabet").first);
  auto build = [&](const std::string& side, const Alphabet& alphabet, const std::string& cfg_text) {
    const auto& [kind, kind_line] = require(side + ".kind");
    if (kind == "regex") return LanguageSpec::regular(alphabet, require(side + ".regex").first);
    if (kind == "cfg") {
      if (cfg_text.empty()) throw ParseError("missing key '" + side + ".cfg'", line_no);
      return LanguageSpec::context_free(alphabet, cfg_text);
    }
    throw ParseError("line " + std::to_string(kind_line) + ": kind must be regex or cfg", kind_line);
  };
  return FSystem(build("core", sigma, core_cfg), build("proc", Alphabet::directions(), proc_cfg));
}

FSystem load_fsystem_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open spec file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_fsystem_spec(buffer.str());
}

}  // namespace foldsys
