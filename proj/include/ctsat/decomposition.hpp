#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ctsat/formula.hpp"
#include "ctsat/permutation.hpp"

namespace ctsat {

// Triplet values are packed into 3 bits, leftmost window position highest.
inline std::string triplet_string(int v) {
  return {char('0' + ((v >> 2) & 1)), char('0' + ((v >> 1) & 1)),
          char('0' + (v & 1))};
}

// A CT formula: per-tier forbidden value triplets under one permutation.
// tier_mask[t] bit v set == triplet v is forbidden at tier t (t = window
// starting at position t). Empty tiers are permitted.
struct CtFormula {
  Permutation perm;
  std::vector<uint8_t> tier_mask;                 // n-2 entries
  std::vector<std::vector<int>> source_lines;     // per tier: input line indices

  int tier_count() const { return static_cast<int>(tier_mask.size()); }

  // Content identity; source-line bookkeeping is not part of it.
  friend bool operator==(const CtFormula& a, const CtFormula& b) {
    return a.perm == b.perm && a.tier_mask == b.tier_mask;
  }
};

struct Decomposition {
  std::vector<CtFormula> parts;
  int group_count = 0;  // w
};

struct CoverageError : std::runtime_error {
  int line_index;
  CoverageError(int idx, const std::string& what)
      : std::runtime_error(what), line_index(idx) {}
};

using ColumnTriple = std::array<int, 3>;

inline ColumnTriple columns_of(const Line& l) {
  return {l.cells[0].col, l.cells[1].col, l.cells[2].col};
}

// Group lines by their (sorted) column triple.
inline std::map<ColumnTriple, std::vector<int>> group_lines(
    const TabularFormula& f) {
  std::map<ColumnTriple, std::vector<int>> groups;
  for (int i = 0; i < f.line_count(); ++i)
    groups[columns_of(f.lines()[i])].push_back(i);
  return groups;
}

// Encode a line as a forbidden triplet at window `t` of `perm`.
// The line's columns must occupy positions t, t+1, t+2.
inline int triplet_under(const Line& l, const Permutation& perm, int t) {
  int v = 0;
  for (const Cell& c : l.cells) {
    int p = perm.pos_of(c.col) - t;
    v |= c.bit << (2 - p);
  }
  return v;
}

// One CT formula per column group, the group's three columns moved to the
// front and the rest shifted after them, everything ascending. Implemented
// as the literal k-tuple survey of the m x n table; every visited cell
// bumps *op_counter.
inline Decomposition naive_decompose(const TabularFormula& f,
                                     uint64_t* op_counter = nullptr) {
  const int n = f.var_count();
  uint64_t ops = 0;
  std::map<ColumnTriple, std::vector<int>> groups;
  for (int i = 0; i < f.line_count(); ++i) {
    ops += n;
    groups[columns_of(f.lines()[i])].push_back(i);
  }
  Decomposition d;
  d.group_count = static_cast<int>(groups.size());
  for (const auto& [key, members] : groups) {
    std::vector<int> order(key.begin(), key.end());
    for (int v = 0; v < n; ++v)
      if (v != key[0] && v != key[1] && v != key[2]) order.push_back(v);
    CtFormula part;
    part.perm = Permutation(std::move(order));
    part.tier_mask.assign(std::max(n - 2, 0), 0);
    part.source_lines.assign(std::max(n - 2, 0), {});
    for (int i = 0; i < f.line_count(); ++i) {
      ops += n;  // survey pass over the full table for this group
      if (columns_of(f.lines()[i]) != key) continue;
      part.tier_mask[0] |= 1 << triplet_under(f.lines()[i], part.perm, 0);
      part.source_lines[0].push_back(i);
    }
    d.parts.push_back(std::move(part));
  }
  if (op_counter) *op_counter = ops;
  return d;
}

// Place every line on the first supplied permutation where its column
// triple is contiguous. A line contiguous nowhere is a coverage error.
inline Decomposition decompose_with_permutations(
    const TabularFormula& f, const std::vector<Permutation>& perms) {
  const int n = f.var_count();
  Decomposition d;
  d.group_count = static_cast<int>(group_lines(f).size());
  for (const Permutation& p : perms) {
    CtFormula part;
    part.perm = p;
    part.tier_mask.assign(std::max(n - 2, 0), 0);
    part.source_lines.assign(std::max(n - 2, 0), {});
    d.parts.push_back(std::move(part));
  }
  for (int i = 0; i < f.line_count(); ++i) {
    const Line& l = f.lines()[i];
    bool placed = false;
    for (CtFormula& part : d.parts) {
      std::array<int, 3> pos;
      for (int j = 0; j < 3; ++j) pos[j] = part.perm.pos_of(l.cells[j].col);
      std::sort(pos.begin(), pos.end());
      if (pos[1] != pos[0] + 1 || pos[2] != pos[0] + 2) continue;
      part.tier_mask[pos[0]] |= 1 << triplet_under(l, part.perm, pos[0]);
      part.source_lines[pos[0]].push_back(i);
      placed = true;
      break;
    }
    if (!placed)
      throw CoverageError(
          i, "line " + std::to_string(i + 1) +
                 " is contiguous in none of the supplied permutations");
  }
  return d;
}

inline bool check_k_bound(const Decomposition& d, const TabularFormula& f) {
  const int k = static_cast<int>(d.parts.size());
  const int m = f.line_count();
  const int n = f.var_count();
  if (m == 0) return k == 0;
  const int lower = (d.group_count + n - 3) / (n - 2);  // ceil(w / (n-2))
  return lower <= k && k <= m;
}

}  // namespace ctsat
