#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ctsat/formula.hpp"
#include "ctsat/permutation.hpp"
#include "ctsat/triplet_structures.hpp"

namespace ctsat {

inline std::string couple_string(int c) {
  return {char('0' + (c >> 1)), char('0' + (c & 1))};
}

// Compact couples structure: n-1 tiers of allowed 2-bit couples plus the
// twins-label constraints. tier_mask[j] bit c set == couple c present at
// tier j (variables at positions j, j+1). forbidden[j] bit (c1*4+c2) set ==
// the adjacent pair (c1 at tier j, c2 at tier j+1) is inadmissible.
struct Ccs {
  Permutation perm;
  std::vector<uint8_t> tier_mask;
  std::vector<uint16_t> forbidden;  // n-2 boundaries

  int tier_count() const { return static_cast<int>(tier_mask.size()); }
  bool has(int tier, int c) const { return tier_mask[tier] >> c & 1; }
  bool pair_forbidden(int j, int c1, int c2) const {
    return forbidden[j] >> (c1 * 4 + c2) & 1;
  }

  friend bool operator==(const Ccs&, const Ccs&) = default;
};

struct CcsSystem {
  std::vector<Ccs> structures;
  int var_count = 0;
};

// Remove couples that sit on no admissible full-length concatenation
// (forward/backward reachability along the tier chain, labels honoured),
// then drop forbidden pairs that no longer reference present couples.
// Provably does not change the coded set.
inline Ccs ccs_clear(Ccs g) {
  const int T = g.tier_count();
  std::vector<uint8_t> fwd(T, 0), bwd(T, 0);
  fwd[0] = g.tier_mask[0];
  for (int j = 1; j < T; ++j)
    for (int c = 0; c < 4; ++c) {
      if (!g.has(j, c)) continue;
      for (int p = 0; p < 4; ++p)
        if ((fwd[j - 1] >> p & 1) && (p & 1) == (c >> 1) &&
            !g.pair_forbidden(j - 1, p, c)) {
          fwd[j] |= 1 << c;
          break;
        }
    }
  bwd[T - 1] = g.tier_mask[T - 1];
  for (int j = T - 2; j >= 0; --j)
    for (int c = 0; c < 4; ++c) {
      if (!g.has(j, c)) continue;
      for (int q = 0; q < 4; ++q)
        if ((bwd[j + 1] >> q & 1) && (c & 1) == (q >> 1) &&
            !g.pair_forbidden(j, c, q)) {
          bwd[j] |= 1 << c;
          break;
        }
    }
  for (int j = 0; j < T; ++j) g.tier_mask[j] = fwd[j] & bwd[j];
  for (int j = 0; j + 1 < T; ++j) {
    uint16_t kept = 0;
    for (int c1 = 0; c1 < 4; ++c1)
      for (int c2 = 0; c2 < 4; ++c2)
        if (g.pair_forbidden(j, c1, c2) && g.has(j, c1) && g.has(j + 1, c2))
          kept |= 1 << (c1 * 4 + c2);
    g.forbidden[j] = kept;
  }
  return g;
}

// Split every triplet x_j x_{j+1} x_{j+2} into the couples x_j x_{j+1} and
// x_{j+1} x_{j+2} on adjacent tiers (duplicates collapse), then mark as
// forbidden every adjacent couple pair whose overlap agrees but whose
// concatenated triplet is absent from the source tier. Labels are computed
// before any modification of the structures.
inline Ccs cts_to_ccs(const Cts& s) {
  if (s.empty_flag || s.tier_mask.empty())
    throw std::invalid_argument("cts_to_ccs: empty structure");
  const int T = s.tier_count();
  Ccs g;
  g.perm = s.perm;
  g.tier_mask.assign(T + 1, 0);
  g.forbidden.assign(T, 0);
  for (int t = 0; t < T; ++t)
    for (int v = 0; v < 8; ++v)
      if (s.has(t, v)) {
        g.tier_mask[t] |= 1 << (v >> 1);
        g.tier_mask[t + 1] |= 1 << (v & 3);
      }
  for (int j = 0; j < T; ++j)
    for (int c1 = 0; c1 < 4; ++c1)
      for (int c2 = 0; c2 < 4; ++c2) {
        if (!g.has(j, c1) || !g.has(j + 1, c2)) continue;
        if ((c1 & 1) != (c2 >> 1)) continue;
        if (!s.has(j, c1 << 1 | (c2 & 1)))
          g.forbidden[j] |= 1 << (c1 * 4 + c2);
      }
  return ccs_clear(std::move(g));
}

// All length-n concatenations via one-variable-overlap adjoining; with
// honor_labels, concatenations using a forbidden adjacent pair are skipped.
inline std::optional<std::vector<Assignment>> enumerate_sets(
    const Ccs& g, bool honor_labels, size_t cap) {
  std::vector<Assignment> out;
  const int n = g.perm.size();
  const int T = g.tier_count();
  Assignment base(n, 0);
  bool overflow = false;
  std::vector<uint8_t> seq;
  auto rec = [&](auto&& self, int j, int prev) -> void {
    if (overflow) return;
    if (j == T) {
      if (out.size() >= cap) {
        overflow = true;
        return;
      }
      for (int i = 0; i < n; ++i) base[g.perm.at(i)] = seq[i];
      out.push_back(base);
      return;
    }
    for (int c = 0; c < 4; ++c) {
      if (!g.has(j, c)) continue;
      if (j > 0) {
        if ((c >> 1) != seq[j]) continue;
        if (honor_labels && g.pair_forbidden(j - 1, prev, c)) continue;
        seq.push_back(c & 1);
      } else {
        seq = {static_cast<uint8_t>(c >> 1), static_cast<uint8_t>(c & 1)};
      }
      self(self, j + 1, c);
      if (j > 0) seq.pop_back();
    }
  };
  if (T > 0) rec(rec, 0, 0);
  if (overflow) return std::nullopt;
  return out;
}

}  // namespace ctsat
