#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctsat/couple_structures.hpp"
#include "ctsat/inversion.hpp"

namespace ctsat {

enum class VarState : uint8_t {
  kUnassigned,
  kZero,          // driven to zero, column kept
  kOne,           // driven to zero via column inversion, U-bit set
  kStar,          // either value admissible
  kTerminalZero,  // never changes afterwards
  kTerminalOne,
  kTerminalStar,
};

struct TraceEvent {
  enum Kind { kInvert, kImply, kResidue, kBacktrack, kStar, kVerdict } kind;
  int var = -1;       // 0-based; -1 when unused
  int value = -1;     // residue/backtrack chosen value
  int from_var = -1;  // imply antecedent
  bool from_inverted = false;
  bool to_inverted = false;
  std::string text;  // verdict / witness

  static TraceEvent make(Kind kind, int var = -1, int value = -1) {
    TraceEvent e;
    e.kind = kind;
    e.var = var;
    e.value = value;
    return e;
  }
};

// One bracket of formula (1): (s = 0) => (v = 0), both literals zero-valued.
struct Implication {
  int from_var;
  bool from_inverted;
  int to_var;
  bool to_inverted;
};

struct SolveOptions {
  // Forced sequence of (variable, first value) residue choices. Entries
  // whose variable is already settled are skipped. After the list runs
  // out: lowest unassigned non-star variable, value 0 first.
  std::vector<std::pair<int, int>> start_order;
  bool record_trace = true;
};

struct SolveResult {
  enum class Verdict { kSat, kUnsat } verdict = Verdict::kUnsat;
  std::string witness;  // bit-string with '*' at star positions (SAT only)
  std::vector<TraceEvent> trace;
  std::vector<Implication> implications;
  std::string defect;  // non-empty: internal verification failed
  int backtracks = 0;

  bool sat() const { return verdict == Verdict::kSat; }
};

inline std::vector<std::string> var_names(int n) {
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i)
    names[i] = n <= 26 ? std::string(1, char('a' + i))
                       : "x" + std::to_string(i + 1);
  return names;
}

// Renders the implication log as the conjunction of negated two-literal
// disjunctions it realizes. Empty log renders as the empty string.
inline std::string emit_formula1(const std::vector<Implication>& log,
                                 const std::vector<std::string>& names) {
  std::string out;
  for (const Implication& im : log) {
    if (!out.empty()) out += " & ";
    out += "!(";
    if (im.from_inverted) out += '!';
    out += names[im.from_var];
    out += " | ";
    if (im.to_inverted) out += '!';
    out += names[im.to_var];
    out += ')';
  }
  return out;
}

// The zero-distribution procedure: distribute zero values through the CCS
// system, building vector U, with at most one restorable residue point.
class ZeroDistributionSolver {
 public:
  explicit ZeroDistributionSolver(CcsSystem system, SolveOptions options = {})
      : original_(system),
        work_(std::move(system)),
        opts_(std::move(options)),
        n_(work_.var_count),
        assigned_(n_, false),
        star_(n_, false),
        terminal_(n_, false),
        u_(n_, 0) {}

  SolveResult solve() {
    SolveResult result;
    if (!preprocess_constants()) {
      finish_unsat(result);
      return result;
    }
    mark_wave_terminal();
    int order_pos = 0;
    while (true) {
      star_sweep();
      int pick = -1, value = 0;
      while (order_pos < static_cast<int>(opts_.start_order.size())) {
        auto [v, val] = opts_.start_order[order_pos++];
        if (!assigned_[v] && !star_[v]) {
          pick = v;
          value = val;
          break;
        }
      }
      if (pick < 0)
        for (int v = 0; v < n_; ++v)
          if (!assigned_[v] && !star_[v]) {
            pick = v;
            break;
          }
      if (pick < 0) break;  // everything assigned or star
      Snapshot snap = save();
      trace(TraceEvent::make(TraceEvent::kResidue, pick, value));
      if (!try_branch(pick, value)) {
        restore(snap);
        ++result.backtracks;
        trace(TraceEvent::make(TraceEvent::kBacktrack, pick, 1 - value));
        if (!try_branch(pick, 1 - value)) {
          finish_unsat(result);
          return result;
        }
      }
      mark_wave_terminal();
    }
    result.verdict = SolveResult::Verdict::kSat;
    result.witness.assign(n_, '0');
    for (int v = 0; v < n_; ++v)
      result.witness[v] = star_[v] ? '*' : char('0' + u_[v]);
    verify_witness(result);
    TraceEvent verdict = TraceEvent::make(TraceEvent::kVerdict);
    verdict.text = "SAT " + result.witness;
    trace(std::move(verdict));
    result.trace = std::move(trace_);
    result.implications = implications_;
    return result;
  }

  // --- introspection used by tests and the trace command
  VarState state_of(int v) const {
    if (star_[v]) return terminal_[v] ? VarState::kTerminalStar : VarState::kStar;
    if (!assigned_[v]) return VarState::kUnassigned;
    if (u_[v]) return terminal_[v] ? VarState::kTerminalOne : VarState::kOne;
    return terminal_[v] ? VarState::kTerminalZero : VarState::kZero;
  }
  const CicVector& u() const { return u_; }
  const CcsSystem& working_system() const { return work_; }
  const std::vector<Implication>& implications() const { return implications_; }

  // Exposed stages (precondition: used in solve() order).
  bool preprocess_constants() {
    std::vector<int> consts(n_, -1);
    for (const Ccs& g : work_.structures) {
      std::vector<int> seen(n_, 0);
      for (int j = 0; j < g.tier_count(); ++j)
        for (int c = 0; c < 4; ++c)
          if (g.has(j, c)) {
            seen[g.perm.at(j)] |= (c >> 1) ? 2 : 1;
            seen[g.perm.at(j + 1)] |= (c & 1) ? 2 : 1;
          }
      for (int v = 0; v < n_; ++v) {
        int val = seen[v] == 1 ? 0 : seen[v] == 2 ? 1 : -1;
        if (val < 0) continue;
        if (consts[v] >= 0 && consts[v] != val) return false;  // conflict
        consts[v] = val;
      }
    }
    for (int v = 0; v < n_; ++v)
      if (consts[v] >= 0 && !assign_zero(v, consts[v] == 1, nullptr))
        return false;
    return run_wave();
  }

  bool propagate_zero(int var) {
    enqueue_around(var);
    return run_wave();
  }

  // Assign a starting variable (value 1 inverts its columns first) and run
  // the distribution wave. False on contradiction.
  bool try_assign_start(int var, int value) { return try_branch(var, value); }

  // The default residue choice: lowest base index among unassigned
  // non-star variables, value 0 tried first.
  std::optional<std::pair<int, int>> next_start() const {
    for (int v = 0; v < n_; ++v)
      if (!assigned_[v] && !star_[v]) return std::pair{v, 0};
    return std::nullopt;
  }

 private:
  struct Snapshot {
    std::vector<Ccs> structures;
    std::vector<bool> assigned, star, terminal;
    CicVector u;
    std::vector<Implication> implications;
  };

  void trace(TraceEvent e) {
    if (opts_.record_trace) trace_.push_back(std::move(e));
  }

  Snapshot save() const {
    return {work_.structures, assigned_, star_, terminal_, u_, implications_};
  }
  void restore(Snapshot& s) {
    work_.structures = std::move(s.structures);
    assigned_ = std::move(s.assigned);
    star_ = std::move(s.star);
    terminal_ = std::move(s.terminal);
    u_ = std::move(s.u);
    implications_ = std::move(s.implications);
    queue_.clear();
  }

  bool try_branch(int var, int value) {
    if (!assign_zero(var, value == 1, nullptr)) return false;
    return run_wave();
  }

  void finish_unsat(SolveResult& r) {
    r.verdict = SolveResult::Verdict::kUnsat;
    TraceEvent verdict = TraceEvent::make(TraceEvent::kVerdict);
    verdict.text = "UNSAT";
    trace(std::move(verdict));
    r.trace = std::move(trace_);
    r.implications = implications_;
  }

  void mark_wave_terminal() {
    for (int v = 0; v < n_; ++v)
      if (assigned_[v]) terminal_[v] = true;
  }

  void invert_column(int v) {
    u_[v] = 1;
    trace(TraceEvent::make(TraceEvent::kInvert, v));
    for (Ccs& g : work_.structures) {
      int pos = g.perm.pos_of(v);
      for (int j : {pos - 1, pos}) {
        if (j < 0 || j >= g.tier_count()) continue;
        int x = j == pos ? 2 : 1;  // component of v in tier j
        g.tier_mask[j] = detail::xor_remap4(g.tier_mask[j], x);
      }
      for (int j = 0; j + 1 < g.tier_count(); ++j) {
        int x1 = (g.perm.at(j) == v) << 1 | (g.perm.at(j + 1) == v);
        int x2 = (g.perm.at(j + 1) == v) << 1 | (g.perm.at(j + 2) == v);
        if (!x1 && !x2) continue;
        uint16_t nf = 0;
        for (int c1 = 0; c1 < 4; ++c1)
          for (int c2 = 0; c2 < 4; ++c2)
            if (g.forbidden[j] >> (c1 * 4 + c2) & 1)
              nf |= 1 << ((c1 ^ x1) * 4 + (c2 ^ x2));
        g.forbidden[j] = nf;
      }
    }
  }

  bool assign_zero(int v, bool inverted, const Implication* log) {
    if (assigned_[v]) return u_[v] == (inverted ? 1 : 0);
    if (inverted) {
      if (u_[v]) return false;  // double inversion attempt
      invert_column(v);
    }
    assigned_[v] = true;
    if (log) {
      implications_.push_back(*log);
      TraceEvent e = TraceEvent::make(TraceEvent::kImply, v);
      e.from_var = log->from_var;
      e.from_inverted = log->from_inverted;
      e.to_inverted = log->to_inverted;
      trace(std::move(e));
    }
    enqueue_around(v);
    return true;
  }

  void enqueue_around(int v) {
    for (size_t si = 0; si < work_.structures.size(); ++si) {
      const Ccs& g = work_.structures[si];
      int pos = g.perm.pos_of(v);
      for (int j = pos - 2; j <= pos + 1; ++j)
        if (j >= 0 && j < g.tier_count()) queue_.emplace_back(si, j);
    }
  }

  // Couples at tier j compatible with the current assignment, with
  // twins-label exclusions against forced adjacent couples applied.
  uint8_t admissible(const Ccs& g, int j, bool ax, bool ay) const {
    uint8_t cand = 0;
    for (int c = 0; c < 4; ++c) {
      if (!g.has(j, c)) continue;
      if (ax && (c >> 1)) continue;
      if (ay && (c & 1)) continue;
      cand |= 1 << c;
    }
    if (j > 0 && ax && assigned_[g.perm.at(j - 1)])
      for (int c = 0; c < 4; ++c)
        if ((cand >> c & 1) && g.pair_forbidden(j - 1, 0, c)) cand &= ~(1 << c);
    if (j + 1 < g.tier_count() && ay && assigned_[g.perm.at(j + 2)])
      for (int c = 0; c < 4; ++c)
        if ((cand >> c & 1) && g.pair_forbidden(j, c, 0)) cand &= ~(1 << c);
    return cand;
  }

  bool examine(size_t si, int j) {
    const Ccs& g = work_.structures[si];
    const int x = g.perm.at(j), y = g.perm.at(j + 1);
    const bool ax = assigned_[x], ay = assigned_[y];
    if (!ax && !ay) return true;
    uint8_t cand = admissible(g, j, ax, ay);
    if (!cand) return false;  // contradiction / twins deadlock
    if (ax && ay) return true;
    int free_var = ax ? y : x;
    int vals = 0;  // bit0: value 0 seen, bit1: value 1 seen
    for (int c = 0; c < 4; ++c)
      if (cand >> c & 1) vals |= 1 << (ax ? (c & 1) : (c >> 1));
    if (star_[free_var]) return vals == 3;
    if (vals == 3) return true;  // case (a): both values stay open
    int anchor = ax ? x : y;
    Implication im{anchor, u_[anchor] == 1, free_var, vals == 2};
    return assign_zero(free_var, vals == 2, &im);
  }

  bool run_wave() {
    while (!queue_.empty()) {
      auto [si, j] = queue_.front();
      queue_.pop_front();
      if (!examine(si, j)) {
        queue_.clear();
        return false;
      }
    }
    return true;
  }

  // A variable may be left free only when every structure keeps both of
  // its values available no matter how the remaining variables settle.
  bool star_eligible(int v) const {
    for (const Ccs& g : work_.structures) {
      int pos = g.perm.pos_of(v);
      for (int j : {pos - 1, pos}) {
        if (j < 0 || j >= g.tier_count()) continue;
        const bool first = j == pos;  // v is the first component of tier j
        int other = first ? g.perm.at(j + 1) : g.perm.at(j);
        uint8_t need;
        if (assigned_[other])
          need = first ? 0b0101 : 0b0011;  // {00,10} resp. {00,01}
        else
          need = 0b1111;
        if ((g.tier_mask[j] & need) != need) return false;
        for (int b = 0; b + 1 < g.tier_count(); ++b) {
          if (!g.forbidden[b]) continue;
          for (int c1 = 0; c1 < 4; ++c1)
            for (int c2 = 0; c2 < 4; ++c2) {
              if (!(g.forbidden[b] >> (c1 * 4 + c2) & 1)) continue;
              for (int side = 0; side < 2; ++side) {
                int jj = b + side;
                int cx = side == 0 ? c1 : c2;
                if (jj != j || !(need >> cx & 1)) continue;
                int oj = side == 0 ? b + 1 : b;
                int oc = side == 0 ? c2 : c1;
                bool forced = assigned_[g.perm.at(oj)] &&
                              assigned_[g.perm.at(oj + 1)];
                if (!forced || oc == 0) return false;
              }
            }
        }
      }
    }
    return true;
  }

  void star_sweep() {
    for (int v = 0; v < n_; ++v)
      if (!assigned_[v] && !star_[v] && star_eligible(v)) {
        star_[v] = true;
        terminal_[v] = true;
        trace(TraceEvent::make(TraceEvent::kStar, v));
      }
  }

  // Nil-set verification of the witness with every star expansion covered
  // (window-local, so exact at any star count).
  void verify_witness(SolveResult& r) {
    std::vector<bool> star(n_, false);
    for (int v = 0; v < n_; ++v) star[v] = star_[v];
    for (const Ccs& g : original_.structures)
      if (!detail::nil_under_all_expansions(g, u_, star)) {
        r.defect = "SAT witness " + r.witness + " fails nil-set verification";
        return;
      }
  }

  CcsSystem original_;
  CcsSystem work_;
  SolveOptions opts_;
  int n_;
  std::vector<bool> assigned_, star_, terminal_;
  CicVector u_;
  std::vector<TraceEvent> trace_;
  std::vector<Implication> implications_;
  std::deque<std::pair<size_t, int>> queue_;
};

inline SolveResult solve(CcsSystem system, SolveOptions options = {}) {
  return ZeroDistributionSolver(std::move(system), std::move(options)).solve();
}

}  // namespace ctsat
