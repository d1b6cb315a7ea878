#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ctsat/decomposition.hpp"
#include "ctsat/formula.hpp"
#include "ctsat/permutation.hpp"

namespace ctsat {

// Compact triplets structure: n-2 tiers of allowed triplets. tier_mask[t]
// bit v set == triplet v present. If any tier clears out, the whole
// structure is the empty set (empty_flag).
struct Cts {
  Permutation perm;
  std::vector<uint8_t> tier_mask;
  bool empty_flag = false;

  int tier_count() const { return static_cast<int>(tier_mask.size()); }
  bool has(int tier, int v) const { return tier_mask[tier] >> v & 1; }

  friend bool operator==(const Cts&, const Cts&) = default;
};

struct CtsSystem {
  std::vector<Cts> structures;
  int var_count = 0;
};

namespace detail {

// Masks of triplets whose low two bits match / whose high two bits match a
// given 2-bit overlap, used by the adjoining tests.
constexpr uint8_t suffix_mask(int overlap) {
  uint8_t m = 0;
  for (int v = 0; v < 8; ++v)
    if ((v & 3) == overlap) m |= 1 << v;
  return m;
}
constexpr uint8_t prefix_mask(int overlap) {
  uint8_t m = 0;
  for (int v = 0; v < 8; ++v)
    if ((v >> 1) == overlap) m |= 1 << v;
  return m;
}

}  // namespace detail

// Fixpoint removal of non-compatible lines: every surviving line adjoins
// at least one line in each adjacent tier (overlapping values coincide).
inline Cts clear(Cts s) {
  if (s.empty_flag) return s;
  const int T = s.tier_count();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int t = 0; t < T; ++t) {
      uint8_t kept = 0;
      for (int v = 0; v < 8; ++v) {
        if (!s.has(t, v)) continue;
        bool ok = true;
        if (t > 0 && !(s.tier_mask[t - 1] & detail::suffix_mask(v >> 1)))
          ok = false;
        if (t + 1 < T && !(s.tier_mask[t + 1] & detail::prefix_mask(v & 3)))
          ok = false;
        if (ok) kept |= 1 << v;
      }
      if (kept != s.tier_mask[t]) {
        s.tier_mask[t] = kept;
        changed = true;
      }
    }
  }
  for (uint8_t m : s.tier_mask)
    if (!m) {
      s.empty_flag = true;
      for (uint8_t& t : s.tier_mask) t = 0;
      break;
    }
  return s;
}

// Tier t of the CTS holds the triplets absent from the CTF at tier t.
inline Cts build_cts(const CtFormula& ctf) {
  Cts s;
  s.perm = ctf.perm;
  s.tier_mask.resize(ctf.tier_count());
  for (int t = 0; t < ctf.tier_count(); ++t)
    s.tier_mask[t] = static_cast<uint8_t>(~ctf.tier_mask[t]);
  return clear(std::move(s));
}

inline bool is_elementary(const Cts& s) {
  if (s.empty_flag || s.tier_mask.empty()) return false;
  for (uint8_t m : s.tier_mask)
    if (__builtin_popcount(m) != 1) return false;
  return true;
}

// All tier-wise compatible concatenations, mapped back to base variable
// order. Returns nullopt once more than `cap` sets would be produced.
inline std::optional<std::vector<Assignment>> enumerate_sets(const Cts& s,
                                                             size_t cap) {
  std::vector<Assignment> out;
  if (s.empty_flag) return out;
  const int n = s.perm.size();
  const int T = s.tier_count();
  std::vector<int> picks(T);
  Assignment base(n, 0);
  bool overflow = false;
  auto emit = [&](const std::vector<uint8_t>& seq) {
    if (out.size() >= cap) {
      overflow = true;
      return;
    }
    for (int i = 0; i < n; ++i) base[s.perm.at(i)] = seq[i];
    out.push_back(base);
  };
  std::vector<uint8_t> seq;
  auto rec = [&](auto&& self, int t) -> void {
    if (overflow) return;
    if (t == T) {
      emit(seq);
      return;
    }
    for (int v = 0; v < 8; ++v) {
      if (!s.has(t, v)) continue;
      if (t == 0) {
        seq = {static_cast<uint8_t>(v >> 2), static_cast<uint8_t>(v >> 1 & 1),
               static_cast<uint8_t>(v & 1)};
      } else {
        if ((seq[t] << 1 | seq[t + 1]) != (v >> 1)) continue;
        seq.push_back(v & 1);
      }
      self(self, t + 1);
      if (t > 0) seq.pop_back();
    }
  };
  rec(rec, 0);
  if (overflow) return std::nullopt;
  return out;
}

struct UnifyResult {
  CtsSystem system;
  bool empty = false;
};

namespace detail {

inline std::vector<int> structure_constants(const Cts& s) {
  const int n = s.perm.size();
  std::vector<int> seen(n, 0);  // bit0: value 0 occurs, bit1: value 1 occurs
  for (int t = 0; t < s.tier_count(); ++t)
    for (int v = 0; v < 8; ++v)
      if (s.has(t, v))
        for (int i = 0; i < 3; ++i)
          seen[s.perm.at(t + i)] |= (v >> (2 - i) & 1) ? 2 : 1;
  std::vector<int> consts(n, -1);
  for (int x = 0; x < n; ++x)
    if (seen[x] == 1)
      consts[x] = 0;
    else if (seen[x] == 2)
      consts[x] = 1;
  return consts;
}

}  // namespace detail

// q-ary unification of discordant structures: constants force removal of
// inverse-valued lines everywhere (rule 1); pairs co-occurring inside a
// triplet window of two or more structures keep only the shared value
// combinations (rule 2); clearing follows every removal wave (rule 3).
// Iterated to fixpoint.
inline UnifyResult unify(CtsSystem sys) {
  const int q = static_cast<int>(sys.structures.size());
  const int n = sys.var_count;
  for (Cts& s : sys.structures)
    if (s.empty_flag) return {std::move(sys), true};

  // where does each unordered pair occur: (structure, tier, offsets)
  struct Window {
    int s, t, i, j;  // positions t+i, t+j inside the window, i < j
  };
  std::map<std::pair<int, int>, std::vector<Window>> pair_windows;
  for (int si = 0; si < q; ++si) {
    const Cts& s = sys.structures[si];
    for (int t = 0; t < s.tier_count(); ++t)
      for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
        int a = s.perm.at(t + i), b = s.perm.at(t + j);
        if (a > b) pair_windows[{b, a}].push_back({si, t, j, i});
        else pair_windows[{a, b}].push_back({si, t, i, j});
      }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    // rule 1
    std::vector<int> consts(n, -1);
    for (const Cts& s : sys.structures) {
      std::vector<int> local = detail::structure_constants(s);
      for (int x = 0; x < n; ++x) {
        if (local[x] < 0) continue;
        if (consts[x] >= 0 && consts[x] != local[x])
          return {std::move(sys), true};  // constant conflict
        consts[x] = local[x];
      }
    }
    for (Cts& s : sys.structures)
      for (int t = 0; t < s.tier_count(); ++t)
        for (int v = 0; v < 8; ++v) {
          if (!s.has(t, v)) continue;
          for (int i = 0; i < 3; ++i) {
            int c = consts[s.perm.at(t + i)];
            if (c >= 0 && (v >> (2 - i) & 1) != c) {
              s.tier_mask[t] &= ~(1 << v);
              changed = true;
              break;
            }
          }
        }
    // rule 2
    for (const auto& [pair, wins] : pair_windows) {
      int nstructs = 0, last = -1;
      for (const Window& w : wins)
        if (w.s != last) {
          last = w.s;
          ++nstructs;
        }
      if (nstructs < 2) continue;
      uint8_t allowed = 0xF;  // bit (a*2+b) = combo (value of min var, max var)
      last = -1;
      uint8_t combos = 0;
      auto flush = [&]() {
        if (last >= 0) allowed &= combos;
        combos = 0;
      };
      for (const Window& w : wins) {
        if (w.s != last) flush(), last = w.s;
        const Cts& s = sys.structures[w.s];
        for (int v = 0; v < 8; ++v)
          if (s.has(w.t, v))
            combos |= 1 << ((v >> (2 - w.i) & 1) * 2 + (v >> (2 - w.j) & 1));
      }
      flush();
      for (const Window& w : wins) {
        Cts& s = sys.structures[w.s];
        for (int v = 0; v < 8; ++v) {
          if (!s.has(w.t, v)) continue;
          int combo = (v >> (2 - w.i) & 1) * 2 + (v >> (2 - w.j) & 1);
          if (!(allowed >> combo & 1)) {
            s.tier_mask[w.t] &= ~(1 << v);
            changed = true;
          }
        }
      }
    }
    // rule 3
    for (Cts& s : sys.structures) {
      Cts cleared = clear(s);
      if (cleared.empty_flag) {
        sys.structures[&s - sys.structures.data()] = std::move(cleared);
        return {std::move(sys), true};
      }
      if (cleared.tier_mask != s.tier_mask) changed = true;
      s = std::move(cleared);
    }
  }
  return {std::move(sys), false};
}

}  // namespace ctsat
