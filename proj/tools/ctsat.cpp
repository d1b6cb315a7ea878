// Command-line front end: solve, trace, verify, fuzz, oracle.
// Exit codes: 10 satisfiable, 20 unsatisfiable, 0 success for the
// non-solving subcommands, 1 usage/input error, 2 internal defect.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ctsat/json_io.hpp"
#include "ctsat/oracle.hpp"
#include "ctsat/pipeline.hpp"
#include "ctsat/render.hpp"
#include "ctsat/verify.hpp"

namespace {

using namespace ctsat;

constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitUsage = 1;
constexpr int kExitDefect = 2;

TabularFormula load_formula(const std::string& path, DimacsProblem* problem) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  DimacsProblem p = parse_dimacs(in);
  if (problem) *problem = p;
  return to_tabular(p);
}

int parse_var_token(const std::string& tok, int n) {
  int v;
  if (tok.size() == 1 && tok[0] >= 'a' && tok[0] <= 'z') v = tok[0] - 'a';
  else v = std::stoi(tok) - 1;
  if (v < 0 || v >= n)
    throw std::runtime_error("variable out of range: " + tok);
  return v;
}

// One permutation per line, comma-separated variable names (letters or
// 1-based numbers).
std::vector<Permutation> load_permutations(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Permutation> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<int> order;
    std::istringstream ls(line);
    std::string tok;
    while (std::getline(ls, tok, ',')) order.push_back(parse_var_token(tok, n));
    out.push_back(Permutation(std::move(order)));
  }
  if (out.empty()) throw std::runtime_error("no permutations in " + path);
  return out;
}

// "a,f=1,b" -> try a=0 first, then f=1, then b=0.
std::vector<std::pair<int, int>> parse_start_order(const std::string& spec,
                                                   int n) {
  std::vector<std::pair<int, int>> out;
  std::istringstream ls(spec);
  std::string tok;
  while (std::getline(ls, tok, ',')) {
    int value = 0;
    auto eq = tok.find('=');
    if (eq != std::string::npos) {
      value = std::stoi(tok.substr(eq + 1));
      tok = tok.substr(0, eq);
    }
    if (value != 0 && value != 1)
      throw std::runtime_error("start value must be 0 or 1");
    out.emplace_back(parse_var_token(tok, n), value);
  }
  return out;
}

std::optional<std::vector<Permutation>> maybe_perms(const std::string& path,
                                                    int n) {
  if (path.empty()) return std::nullopt;
  return load_permutations(path, n);
}

Decomposition load_parts(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j = json::parse(in);
  Decomposition d;
  for (const json& p : j.at("parts")) d.parts.push_back(ctf_from_json(p));
  d.group_count = static_cast<int>(d.parts.size());
  return d;
}

int cmd_solve(const std::string& input, const std::string& perms_path,
              const std::string& start_order, bool want_trace, bool as_json) {
  DimacsProblem problem;
  TabularFormula f = load_formula(input, &problem);
  auto perms = maybe_perms(perms_path, f.var_count());
  SolveOptions opts;
  if (!start_order.empty())
    opts.start_order = parse_start_order(start_order, f.var_count());
  PipelineRun run = run_pipeline(f, perms ? &*perms : nullptr, opts);
  const SolveResult& r = run.result;
  if (want_trace) std::cout << trace_json_lines(r.trace);
  if (!r.defect.empty()) {
    std::cerr << "internal defect: " << r.defect << "\n";
    return kExitDefect;
  }
  if (r.sat() && !witness_satisfies(f, r.witness)) {
    std::cerr << "internal defect: witness fails CNF evaluation\n";
    return kExitDefect;
  }
  if (as_json) {
    json j = {{"verdict", r.sat() ? "SAT" : "UNSAT"},
              {"n", f.var_count()},
              {"m", f.line_count()},
              {"backtracks", r.backtracks}};
    if (r.sat()) j["witness"] = r.witness;
    std::cout << j.dump(1) << "\n";
  } else if (r.sat()) {
    std::cout << "s SATISFIABLE\nv " << r.witness << "\n";
  } else {
    std::cout << "s UNSATISFIABLE\n";
  }
  return r.sat() ? kExitSat : kExitUnsat;
}

int cmd_trace(const std::string& input, const std::string& perms_path,
              const std::string& parts_path, const std::string& start_order,
              bool as_json) {
  TabularFormula f = load_formula(input, nullptr);
  const int n = f.var_count();
  std::vector<std::string> names = var_names(n);
  auto perms = maybe_perms(perms_path, n);

  Decomposition d = !parts_path.empty() ? load_parts(parts_path)
                    : perms ? decompose_with_permutations(f, *perms)
                            : naive_decompose(f);
  SolveOptions opts;
  if (!start_order.empty()) opts.start_order = parse_start_order(start_order, n);

  // with --json the human tables are suppressed and only the stage dump
  // is printed
  std::ostringstream text;
  json stages;
  text << "== input ==\n" << render_tabular(f, names);
  stages["input"] = to_json(f);
  stages["decomposition"] = to_json(d);
  if (d.parts.empty() && n >= 3) {
    // nothing constrains anything: show the complete structure
    CtFormula whole;
    whole.perm = Permutation::identity(n);
    whole.tier_mask.assign(n - 2, 0);
    text << "== structure (complete) ==\n"
         << render_cts(build_cts(whole), names);
  }
  json pre_stage = json::array(), cts_stage = json::array();
  for (size_t i = 0; i < d.parts.size(); ++i) {
    text << "== part " << i + 1 << " ==\n" << render_ctf(d.parts[i], names);
    Cts pre;
    pre.perm = d.parts[i].perm;
    for (uint8_t m : d.parts[i].tier_mask)
      pre.tier_mask.push_back(static_cast<uint8_t>(~m));
    Cts cleared = clear(pre);
    pre_stage.push_back(to_json(pre));
    cts_stage.push_back(to_json(cleared));
    std::vector<uint8_t> marks;
    for (int t = 0; t < pre.tier_count(); ++t)
      marks.push_back(cleared.empty_flag
                          ? pre.tier_mask[t]
                          : pre.tier_mask[t] & ~cleared.tier_mask[t]);
    text << "== structure " << i + 1 << " before clearing ==\n"
         << render_cts(pre, names, &marks);
    text << "== structure " << i + 1 << " ==\n" << render_cts(cleared, names);
  }
  stages["structures_raw"] = pre_stage;
  stages["structures"] = cts_stage;

  PipelineRun run = run_pipeline_from(std::move(d), n, opts);
  int exit_code = kExitUnsat;
  if (run.empty_at_build) {
    text << "== verdict ==\nUNSAT (a structure cleared out)\n";
    stages["verdict"] = "UNSAT";
  } else {
    json uni_stage = json::array();
    for (size_t i = 0; i < run.unified.structures.size(); ++i) {
      text << "== unified structure " << i + 1 << " ==\n"
           << render_cts(run.unified.structures[i], names);
      uni_stage.push_back(to_json(run.unified.structures[i]));
    }
    stages["unified"] = uni_stage;
    if (run.empty_at_unify) {
      text << "== verdict ==\nUNSAT (unification emptied the system)\n";
      stages["verdict"] = "UNSAT";
    } else {
      json ccs_stage = json::array();
      for (size_t i = 0; i < run.ccs.structures.size(); ++i) {
        text << "== couples structure " << i + 1 << " ==\n"
             << render_ccs(run.ccs.structures[i], names);
        ccs_stage.push_back(to_json(run.ccs.structures[i]));
      }
      stages["couples"] = ccs_stage;
      const SolveResult& r = run.result;
      if (r.sat()) {
        CicVector u(n, 0);
        for (int i = 0; i < n; ++i) u[i] = r.witness[i] == '1';
        json mod_stage = json::array();
        for (size_t i = 0; i < run.ccs.structures.size(); ++i) {
          Ccs mod = apply_cic(run.ccs.structures[i], u);
          text << "== couples structure " << i + 1 << " under "
               << to_bitstring(u) << " ==\n"
               << render_ccs(mod, names);
          mod_stage.push_back(to_json(mod));
        }
        stages["modified"] = mod_stage;
        stages["witness"] = r.witness;
      }
      text << "== formula (1) ==\n";
      std::string f1 = emit_formula1(r.implications, names);
      text << (f1.empty() ? "(empty conjunction)" : f1) << "\n";
      text << "== trace ==\n" << trace_json_lines(r.trace);
      text << "== verdict ==\n" << (r.sat() ? "SAT " + r.witness : "UNSAT")
           << "\n";
      stages["verdict"] = r.sat() ? "SAT" : "UNSAT";
      if (!r.defect.empty()) {
        std::cerr << "internal defect: " << r.defect << "\n";
        return kExitDefect;
      }
      exit_code = r.sat() ? kExitSat : kExitUnsat;
    }
  }
  if (as_json)
    std::cout << stages.dump(1) << "\n";
  else
    std::cout << text.str();
  return exit_code;
}

int cmd_verify() {
  int failures = 0;
  for (const VerifyCheck& c : run_verification()) {
    if (c.pass) {
      std::cout << "ok   " << c.name << "\n";
    } else {
      ++failures;
      std::cout << "FAIL " << c.name;
      if (!c.detail.empty()) std::cout << ": " << c.detail;
      if (c.known_divergence) std::cout << " [known divergence]";
      std::cout << "\n";
    }
  }
  std::cout << (failures ? "verification FAILED (" + std::to_string(failures) +
                               " checks)"
                         : "verification passed")
            << "\n";
  return failures ? kExitUsage : 0;
}

int cmd_fuzz(int n, std::vector<int> ms, int count, uint64_t seed,
             unsigned threads, const std::string& out_dir) {
  if (n > kBruteForceVarCap) {
    std::cerr << "n exceeds the oracle cap of " << kBruteForceVarCap << "\n";
    return kExitUsage;
  }
  if (ms.empty()) ms = {3 * n, 4 * n, 5 * n};
  FuzzSummary sum = run_fuzz(n, ms, count, seed, threads);
  if (!out_dir.empty() && !sum.disagreements.empty()) {
    std::filesystem::create_directories(out_dir);
    for (const DiffReport& d : sum.disagreements) {
      char hex[32];
      std::snprintf(hex, sizeof hex, "%016llx",
                    static_cast<unsigned long long>(fnv1a64(d.dimacs)));
      std::string base = std::string(out_dir) + "/" + hex;
      std::ofstream(base + ".cnf") << d.dimacs;
      std::ofstream(base + ".json") << to_json(d).dump(1) << "\n";
    }
  }
  std::cout << to_json(sum).dump(1) << "\n";
  if (sum.sound != sum.total) {
    std::cerr << "soundness violation detected\n";
    return kExitDefect;
  }
  return 0;
}

int cmd_oracle(const std::string& mode, const std::string& input,
               const std::string& perms_path, int n_limit) {
  TabularFormula f = load_formula(input, nullptr);
  if (mode == "brute") {
    std::vector<Assignment> sats = brute_force(f);
    for (const Assignment& a : sats) std::cout << to_bitstring(a) << "\n";
    std::cerr << sats.size() << " satisfying assignments\n";
    return 0;
  }
  // mode == "cic": full CIC search over the decomposed system
  auto perms = maybe_perms(perms_path, f.var_count());
  Decomposition d = perms ? decompose_with_permutations(f, *perms)
                          : naive_decompose(f);
  CtsSystem sys;
  sys.var_count = f.var_count();
  for (const CtFormula& part : d.parts) {
    Cts s = build_cts(part);
    if (s.empty_flag) return kExitUnsat;
    sys.structures.push_back(std::move(s));
  }
  for (const CicVector& u : full_search_jss(sys, n_limit))
    std::cout << to_bitstring(u) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compact triplet/couple structure toolkit for 3-SAT"};
  app.require_subcommand(1);

  std::string input, perms_path, parts_path, start_order, out_dir;
  bool want_trace = false, as_json = false;
  int n = 10, count = 1000, n_limit = 20;
  unsigned threads = 0;
  uint64_t seed = 1;
  std::vector<int> ms;

  CLI::App* solve = app.add_subcommand("solve", "decide a DIMACS 3-CNF");
  solve->add_option("input", input)->required();
  solve->add_option("--perms", perms_path, "permutation file, one per line");
  solve->add_option("--start-order", start_order,
                    "residue choices, e.g. a,f=1");
  solve->add_flag("--trace", want_trace, "emit JSON trace lines");
  solve->add_flag("--json", as_json, "machine-readable result");

  CLI::App* trace = app.add_subcommand("trace", "dump every pipeline stage");
  trace->add_option("input", input)->required();
  trace->add_option("--perms", perms_path);
  trace->add_option("--parts", parts_path,
                    "load the decomposition from a JSON file instead");
  trace->add_option("--start-order", start_order);
  trace->add_flag("--json", as_json);

  app.add_subcommand("verify", "replay the bundled worked examples");

  CLI::App* fuzz = app.add_subcommand("fuzz", "differential batch vs oracle");
  fuzz->add_option("--n", n);
  fuzz->add_option("--m", ms, "clause counts to cycle through");
  fuzz->add_option("--count", count);
  fuzz->add_option("--seed", seed);
  fuzz->add_option("--threads", threads);
  fuzz->add_option("--out", out_dir, "directory for disagreement artifacts");

  CLI::App* oracle = app.add_subcommand("oracle", "reference searches");
  std::string oracle_mode;
  oracle->add_option("mode", oracle_mode)
      ->check(CLI::IsMember({"cic", "brute"}))
      ->required();
  oracle->add_option("input", input)->required();
  oracle->add_option("--perms", perms_path);
  oracle->add_option("--n-limit", n_limit);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed())
      return cmd_solve(input, perms_path, start_order, want_trace, as_json);
    if (trace->parsed())
      return cmd_trace(input, perms_path, parts_path, start_order, as_json);
    if (app.get_subcommand("verify")->parsed()) return cmd_verify();
    if (fuzz->parsed())
      return cmd_fuzz(n, ms, count, seed, threads, out_dir);
    if (oracle->parsed())
      return cmd_oracle(oracle_mode, input, perms_path, n_limit);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
