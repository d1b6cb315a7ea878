#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ctsat/couple_structures.hpp"
#include "ctsat/decomposition.hpp"
#include "ctsat/formula.hpp"
#include "ctsat/triplet_structures.hpp"
#include "ctsat/zero_distribution.hpp"

namespace ctsat {

// One end-to-end run: decompose -> CTS per part -> unify -> CCS -> solve.
// Intermediate stages are kept for the trace command and the tests.
struct PipelineRun {
  Decomposition decomposition;
  CtsSystem raw_cts;       // after build_cts (cleared), before unification
  CtsSystem unified;
  bool empty_at_build = false;   // some part's CTS cleared out
  bool empty_at_unify = false;
  CcsSystem ccs;
  SolveResult result;
};

inline CcsSystem ccs_from_cts(const CtsSystem& sys) {
  CcsSystem out;
  out.var_count = sys.var_count;
  for (const Cts& s : sys.structures) out.structures.push_back(cts_to_ccs(s));
  return out;
}

inline PipelineRun run_pipeline_from(Decomposition d, int n,
                                     SolveOptions options = {}) {
  PipelineRun run;
  run.decomposition = std::move(d);
  run.raw_cts.var_count = n;
  for (const CtFormula& part : run.decomposition.parts) {
    Cts s = build_cts(part);
    if (s.empty_flag) run.empty_at_build = true;
    run.raw_cts.structures.push_back(std::move(s));
  }
  if (run.empty_at_build) {
    run.result.verdict = SolveResult::Verdict::kUnsat;
    TraceEvent verdict = TraceEvent::make(TraceEvent::kVerdict);
    verdict.text = "UNSAT";
    run.result.trace.push_back(std::move(verdict));
    return run;
  }
  UnifyResult u = unify(run.raw_cts);
  run.unified = std::move(u.system);
  if (u.empty) {
    run.empty_at_unify = true;
    run.result.verdict = SolveResult::Verdict::kUnsat;
    TraceEvent verdict = TraceEvent::make(TraceEvent::kVerdict);
    verdict.text = "UNSAT";
    run.result.trace.push_back(std::move(verdict));
    return run;
  }
  run.ccs = ccs_from_cts(run.unified);
  run.result = solve(run.ccs, std::move(options));
  return run;
}

// perms == nullptr selects the naive one-part-per-group decomposition.
inline PipelineRun run_pipeline(const TabularFormula& f,
                                const std::vector<Permutation>* perms = nullptr,
                                SolveOptions options = {}) {
  Decomposition d = perms ? decompose_with_permutations(f, *perms)
                          : naive_decompose(f);
  return run_pipeline_from(std::move(d), f.var_count(), std::move(options));
}

}  // namespace ctsat
