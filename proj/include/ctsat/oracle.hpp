#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ctsat/formula.hpp"
#include "ctsat/pipeline.hpp"

namespace ctsat {

// Deterministic generator; identical streams on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t below(uint64_t k) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % k;
    uint64_t v;
    do v = next();
    while (v >= limit);
    return v % k;
  }

 private:
  uint64_t state_;
};

constexpr int kBruteForceVarCap = 24;

// Ground truth by exhaustive evaluation over all 2^n assignments.
inline std::vector<Assignment> brute_force(const TabularFormula& f) {
  const int n = f.var_count();
  if (n > kBruteForceVarCap)
    throw std::invalid_argument("brute_force refused: n = " +
                                std::to_string(n) + " exceeds " +
                                std::to_string(kBruteForceVarCap));
  // per line: columns mask and falsifying pattern, msb-first like bitstrings
  std::vector<std::pair<uint32_t, uint32_t>> pats;
  for (const Line& l : f.lines()) {
    uint32_t mask = 0, pat = 0;
    for (const Cell& c : l.cells) {
      mask |= uint32_t{1} << (n - 1 - c.col);
      if (c.bit) pat |= uint32_t{1} << (n - 1 - c.col);
    }
    pats.emplace_back(mask, pat);
  }
  std::vector<Assignment> out;
  for (uint64_t code = 0; code < (uint64_t{1} << n); ++code) {
    bool sat = true;
    for (auto [mask, pat] : pats)
      if ((code & mask) == pat) {
        sat = false;
        break;
      }
    if (!sat) continue;
    Assignment a(n);
    for (int i = 0; i < n; ++i) a[i] = code >> (n - 1 - i) & 1;
    out.push_back(std::move(a));
  }
  return out;
}

// m clauses over 3 distinct uniform variables with uniform signs,
// reproducible from the seed byte for byte.
inline TabularFormula random_3cnf(int n, int m, uint64_t seed) {
  if (n < 3) throw std::invalid_argument("random_3cnf needs n >= 3");
  SplitMix64 rng(seed);
  std::vector<Line> lines;
  lines.reserve(m);
  for (int i = 0; i < m; ++i) {
    int c0 = static_cast<int>(rng.below(n));
    int c1, c2;
    do c1 = static_cast<int>(rng.below(n));
    while (c1 == c0);
    do c2 = static_cast<int>(rng.below(n));
    while (c2 == c0 || c2 == c1);
    uint64_t bits = rng.next();
    lines.push_back(Line{{Cell{c0, static_cast<uint8_t>(bits & 1)},
                          Cell{c1, static_cast<uint8_t>(bits >> 1 & 1)},
                          Cell{c2, static_cast<uint8_t>(bits >> 2 & 1)}}});
  }
  return TabularFormula(n, std::move(lines));
}

struct DiffReport {
  uint64_t seed = 0;
  int n = 0;
  int m = 0;  // requested clause count (duplicates collapse in the table)
  std::string pipeline_verdict;
  std::string witness;
  std::string oracle_verdict;
  uint64_t oracle_count = 0;
  bool agreement = false;
  bool sound = true;       // false only on an unsound SAT answer
  std::string defect;      // internal pipeline defect, never method gaps
  std::string dimacs;      // serialized instance, filled on disagreement
};

inline std::string to_dimacs(const TabularFormula& f) {
  std::string out =
      "p cnf " + std::to_string(f.var_count()) + " " +
      std::to_string(f.line_count()) + "\n";
  for (const Line& l : f.lines()) {
    for (const Cell& c : l.cells)
      out += std::to_string(c.bit ? -(c.col + 1) : c.col + 1) + " ";
    out += "0\n";
  }
  return out;
}

// Every '*' expansion of the witness must satisfy the CNF. A clause holds
// under all expansions exactly when one of its non-star literals satisfies
// it (otherwise the expansion falsifying its star literals kills it), so
// the check is linear in the formula size.
inline bool witness_satisfies(const TabularFormula& f,
                              const std::string& witness) {
  for (const Clause3& c : to_clauses(f)) {
    bool sat = false;
    for (const Literal& l : c.lits) {
      char w = witness[l.var];
      if (w != '*' && ((w == '1') != l.negated)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

inline DiffReport differential_run(const TabularFormula& f, uint64_t seed,
                                   int requested_m) {
  DiffReport rep;
  rep.seed = seed;
  rep.n = f.var_count();
  rep.m = requested_m;
  SolveOptions opts;
  opts.record_trace = false;
  PipelineRun run = run_pipeline(f, nullptr, std::move(opts));
  rep.pipeline_verdict = run.result.sat() ? "SAT" : "UNSAT";
  rep.witness = run.result.witness;
  rep.defect = run.result.defect;
  std::vector<Assignment> sats = brute_force(f);
  rep.oracle_count = sats.size();
  rep.oracle_verdict = sats.empty() ? "UNSAT" : "SAT";
  if (run.result.sat()) {
    rep.sound = witness_satisfies(f, rep.witness);
    if (!rep.sound && rep.defect.empty())
      rep.defect = "SAT witness fails eval_cnf";
    rep.agreement = rep.sound && !sats.empty();
  } else {
    rep.agreement = sats.empty();
  }
  if (!rep.agreement) rep.dimacs = to_dimacs(f);
  return rep;
}

struct FuzzSummary {
  uint64_t total = 0;
  uint64_t agree = 0;
  uint64_t sound = 0;
  std::vector<DiffReport> disagreements;
};

// Seeded batch; instance i uses seed base_seed + i and m = ms[i % ms.size()].
// Instances run independently across threads; reports merge in index order.
inline FuzzSummary run_fuzz(int n, const std::vector<int>& ms, int count,
                            uint64_t base_seed, unsigned threads = 0) {
  if (threads == 0)
    threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<DiffReport> reports(count);
  auto worker = [&](unsigned w) {
    for (int i = static_cast<int>(w); i < count; i += threads) {
      uint64_t seed = base_seed + static_cast<uint64_t>(i);
      int m = ms[i % ms.size()];
      reports[i] = differential_run(random_3cnf(n, m, seed), seed, m);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }
  FuzzSummary sum;
  for (DiffReport& r : reports) {
    ++sum.total;
    if (r.agreement) ++sum.agree;
    if (r.sound) ++sum.sound;
    if (!r.agreement) sum.disagreements.push_back(std::move(r));
  }
  return sum;
}

inline uint64_t fnv1a64(const std::string& data) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace ctsat
