#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ctsat/couple_structures.hpp"
#include "ctsat/formula.hpp"
#include "ctsat/triplet_structures.hpp"

namespace ctsat {

// n-bit column-inversion-control vector over base variable order.
using CicVector = Assignment;

namespace detail {

// Remap a presence mask under value -> value ^ x.
inline uint8_t xor_remap8(uint8_t mask, int x) {
  uint8_t out = 0;
  for (int v = 0; v < 8; ++v)
    if (mask >> v & 1) out |= 1 << (v ^ x);
  return out;
}
inline uint8_t xor_remap4(uint8_t mask, int x) {
  uint8_t out = 0;
  for (int c = 0; c < 4; ++c)
    if (mask >> c & 1) out |= 1 << (c ^ x);
  return out;
}

}  // namespace detail

// Complement every column whose base variable has bit 1 in u, in every
// tier, keeping the conformity of components across permutations.
inline Cts apply_cic(const Cts& s, const CicVector& u) {
  Cts out = s;
  for (int t = 0; t < s.tier_count(); ++t) {
    int x = u[s.perm.at(t)] << 2 | u[s.perm.at(t + 1)] << 1 |
            u[s.perm.at(t + 2)];
    out.tier_mask[t] = detail::xor_remap8(s.tier_mask[t], x);
  }
  return out;
}

// Forbidden pairs are transformed alongside the tiers.
inline Ccs apply_cic(const Ccs& g, const CicVector& u) {
  Ccs out = g;
  for (int j = 0; j < g.tier_count(); ++j) {
    int x = u[g.perm.at(j)] << 1 | u[g.perm.at(j + 1)];
    out.tier_mask[j] = detail::xor_remap4(g.tier_mask[j], x);
  }
  for (size_t j = 0; j + 1 < g.tier_mask.size(); ++j) {
    int x1 = u[g.perm.at(j)] << 1 | u[g.perm.at(j + 1)];
    int x2 = u[g.perm.at(j + 1)] << 1 | u[g.perm.at(j + 2)];
    uint16_t nf = 0;
    for (int c1 = 0; c1 < 4; ++c1)
      for (int c2 = 0; c2 < 4; ++c2)
        if (g.forbidden[j] >> (c1 * 4 + c2) & 1)
          nf |= 1 << ((c1 ^ x1) * 4 + (c2 ^ x2));
    out.forbidden[j] = nf;
  }
  return out;
}

// Nil-set detection. For a CTS, 000 at every tier suffices (000 adjoins
// 000); for a CCS the labels must also admit the all-zero chain.
inline bool has_nil_set(const Cts& s) {
  if (s.empty_flag || s.tier_mask.empty()) return false;
  for (uint8_t m : s.tier_mask)
    if (!(m & 1)) return false;
  return true;
}

inline bool has_nil_set(const Ccs& g) {
  if (g.tier_mask.empty()) return false;
  for (uint8_t m : g.tier_mask)
    if (!(m & 1)) return false;
  for (uint16_t f : g.forbidden)
    if (f & 1) return false;  // (00,00) forbidden
  return true;
}

namespace detail {

// Nil-set test under inversion by u without materializing the structure:
// tier t must contain u's projection onto its window.
inline bool nil_under(const Cts& s, const CicVector& u) {
  for (int t = 0; t < s.tier_count(); ++t) {
    int x = u[s.perm.at(t)] << 2 | u[s.perm.at(t + 1)] << 1 |
            u[s.perm.at(t + 2)];
    if (!s.has(t, x)) return false;
  }
  return true;
}
inline bool nil_under(const Ccs& g, const CicVector& u) {
  const int T = g.tier_count();
  for (int j = 0; j < T; ++j) {
    int x = u[g.perm.at(j)] << 1 | u[g.perm.at(j + 1)];
    if (!g.has(j, x)) return false;
  }
  for (int j = 0; j + 1 < T; ++j) {
    int x1 = u[g.perm.at(j)] << 1 | u[g.perm.at(j + 1)];
    int x2 = u[g.perm.at(j + 1)] << 1 | u[g.perm.at(j + 2)];
    if (g.pair_forbidden(j, x1, x2)) return false;
  }
  return true;
}

// nil_under for every expansion of the starred positions at once. Tiers and
// boundaries see at most three variables, so checking all their local star
// combinations is exact and avoids the exponential blowup in star count.
inline bool nil_under_all_expansions(const Ccs& g, const CicVector& u,
                                     const std::vector<bool>& star) {
  const int T = g.tier_count();
  auto bit = [&](int pos, int choice, int idx) {
    int v = g.perm.at(pos);
    return star[v] ? (choice >> idx & 1) : static_cast<int>(u[v]);
  };
  for (int j = 0; j < T; ++j)
    for (int choice = 0; choice < 4; ++choice) {
      int x = bit(j, choice, 0) << 1 | bit(j + 1, choice, 1);
      if (!g.has(j, x)) return false;
    }
  for (int j = 0; j + 1 < T; ++j)
    for (int choice = 0; choice < 8; ++choice) {
      int a = bit(j, choice, 0), b = bit(j + 1, choice, 1),
          c = bit(j + 2, choice, 2);
      if (g.pair_forbidden(j, a << 1 | b, b << 1 | c)) return false;
    }
  return true;
}

template <typename System>
std::vector<CicVector> full_search_impl(const System& sys, int n_limit) {
  const int n = sys.var_count;
  if (n > n_limit)
    throw std::invalid_argument(
        "full CIC search refused: n = " + std::to_string(n) + " exceeds " +
        std::to_string(n_limit));
  for (const auto& s : sys.structures)
    if constexpr (requires { s.empty_flag; }) {
      if (s.empty_flag) return {};
    }
  const uint64_t total = uint64_t{1} << n;
  unsigned workers = std::min<unsigned>(
      std::max(1u, std::thread::hardware_concurrency()), n >= 14 ? 8 : 1);
  std::vector<std::vector<uint64_t>> found(workers);
  auto run = [&](unsigned w) {
    CicVector u(n);
    for (uint64_t code = w; code < total; code += workers) {
      for (int i = 0; i < n; ++i) u[i] = code >> (n - 1 - i) & 1;
      bool all = true;
      for (const auto& s : sys.structures)
        if (!nil_under(s, u)) {
          all = false;
          break;
        }
      if (all) found[w].push_back(code);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  std::vector<uint64_t> codes;
  for (auto& v : found) codes.insert(codes.end(), v.begin(), v.end());
  std::sort(codes.begin(), codes.end());
  std::vector<CicVector> out;
  out.reserve(codes.size());
  for (uint64_t code : codes) {
    CicVector u(n);
    for (int i = 0; i < n; ++i) u[i] = code >> (n - 1 - i) & 1;
    out.push_back(std::move(u));
  }
  return out;
}

}  // namespace detail

// Exhaustive reference search over all 2^n CIC vectors; every returned u
// is itself a JSS in base order.
inline std::vector<CicVector> full_search_jss(const CtsSystem& sys,
                                              int n_limit = 20) {
  return detail::full_search_impl(sys, n_limit);
}
inline std::vector<CicVector> full_search_jss(const CcsSystem& sys,
                                              int n_limit = 20) {
  return detail::full_search_impl(sys, n_limit);
}

}  // namespace ctsat
