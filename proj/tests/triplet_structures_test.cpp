#include "ctsat/triplet_structures.hpp"

#include <random>
#include <set>

#include "ctsat/oracle.hpp"
#include "ctsat/verify.hpp"
#include "gtest/gtest.h"

using namespace ctsat;

namespace {

std::set<std::string> as_set(const std::vector<Assignment>& v) {
  std::set<std::string> out;
  for (const Assignment& a : v) out.insert(to_bitstring(a));
  return out;
}

CtFormula random_ctf(int n, uint64_t seed, int fill_percent = 30) {
  SplitMix64 rng(seed);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(order[i], order[rng.below(i + 1)]);
  CtFormula f;
  f.perm = Permutation(std::move(order));
  f.tier_mask.resize(n - 2);
  f.source_lines.assign(n - 2, {});
  for (uint8_t& m : f.tier_mask)
    for (int v = 0; v < 8; ++v)
      if (rng.below(100) < static_cast<uint64_t>(fill_percent)) m |= 1 << v;
  return f;
}

// The CTF read as a CNF over base variables.
std::set<std::string> ctf_brute_sets(const CtFormula& f, int n) {
  std::set<std::string> out;
  Assignment a(n);
  for (uint64_t code = 0; code < (uint64_t{1} << n); ++code) {
    for (int i = 0; i < n; ++i) a[i] = code >> (n - 1 - i) & 1;
    bool ok = true;
    for (int t = 0; t < f.tier_count() && ok; ++t)
      for (int v = 0; v < 8 && ok; ++v) {
        if (!(f.tier_mask[t] >> v & 1)) continue;
        bool match = true;
        for (int i = 0; i < 3; ++i)
          if (a[f.perm.at(t + i)] != (v >> (2 - i) & 1)) match = false;
        if (match) ok = false;
      }
    if (ok) out.insert(to_bitstring(a));
  }
  return out;
}

// Clearing with removals applied one at a time in random order.
Cts clear_randomized(Cts s, std::mt19937& rng) {
  const int T = s.tier_count();
  while (true) {
    std::vector<std::pair<int, int>> bad;
    for (int t = 0; t < T; ++t)
      for (int v = 0; v < 8; ++v) {
        if (!s.has(t, v)) continue;
        bool ok = true;
        if (t > 0 && !(s.tier_mask[t - 1] & detail::suffix_mask(v >> 1)))
          ok = false;
        if (t + 1 < T && !(s.tier_mask[t + 1] & detail::prefix_mask(v & 3)))
          ok = false;
        if (!ok) bad.emplace_back(t, v);
      }
    if (bad.empty()) break;
    auto [t, v] = bad[rng() % bad.size()];
    s.tier_mask[t] &= ~(1 << v);
  }
  for (uint8_t m : s.tier_mask)
    if (!m) {
      s.empty_flag = true;
      for (uint8_t& t : s.tier_mask) t = 0;
    }
  return s;
}

}  // namespace

TEST(BuildCts, WalkthroughStructure) {
  json sec2 = json::parse(worked::k_section2_json);
  CtFormula f1 = ctf_from_json(
      {{"permutation", {1, 2, 3, 4, 5}}, {"tiers", sec2.at("ctf_tiers")}});
  Cts z = build_cts(f1);
  EXPECT_FALSE(z.empty_flag);
  EXPECT_EQ(z.tier_mask[0], (1 << 0b011) | (1 << 0b100));
  EXPECT_EQ(z.tier_mask[1], (1 << 0b110) | (1 << 0b001));
  EXPECT_EQ(z.tier_mask[2], (1 << 0b101) | (1 << 0b011));
  auto sets = enumerate_sets(z, 100);
  ASSERT_TRUE(sets.has_value());
  EXPECT_EQ(as_set(*sets), (std::set<std::string>{"01101", "10011"}));
}

TEST(BuildCts, EmptyCtfGivesCompleteStructure) {
  CtFormula f;
  f.perm = Permutation::identity(5);
  f.tier_mask.assign(3, 0);
  Cts s = build_cts(f);
  for (uint8_t m : s.tier_mask) EXPECT_EQ(m, 0xFF);
  auto sets = enumerate_sets(s, 100);
  ASSERT_TRUE(sets.has_value());
  EXPECT_EQ(sets->size(), 32u);  // all 2^5
}

TEST(BuildCts, FullyForbiddenTierGivesEmptyStructure) {
  CtFormula f;
  f.perm = Permutation::identity(5);
  f.tier_mask = {0xFF, 0, 0};
  Cts s = build_cts(f);
  EXPECT_TRUE(s.empty_flag);
  auto sets = enumerate_sets(s, 100);
  ASSERT_TRUE(sets.has_value());
  EXPECT_TRUE(sets->empty());
}

TEST(Clear, Idempotent) {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    CtFormula f = random_ctf(5 + seed % 4, 100 + seed, 45);
    Cts once = build_cts(f);
    Cts twice = clear(once);
    EXPECT_EQ(once, twice);
  }
}

TEST(Clear, FixpointIsRemovalOrderIndependent) {
  std::mt19937 rng(7);
  for (uint64_t seed = 0; seed < 80; ++seed) {
    CtFormula f = random_ctf(5 + seed % 4, 500 + seed, 40);
    Cts raw;
    raw.perm = f.perm;
    for (uint8_t m : f.tier_mask) raw.tier_mask.push_back(~m);
    Cts canonical = clear(raw);
    for (int trial = 0; trial < 3; ++trial)
      EXPECT_EQ(clear_randomized(raw, rng), canonical) << "seed " << seed;
  }
}

TEST(Clear, TierWithNoPartnersEmptiesWholeStructure) {
  Cts s;
  s.perm = Permutation::identity(5);
  // tier 2 lines cannot adjoin tier 1
  s.tier_mask = {1 << 0b000, 1 << 0b111, 0xFF};
  Cts c = clear(s);
  EXPECT_TRUE(c.empty_flag);
}

TEST(EnumerateSets, CapOverflowSignalled) {
  CtFormula f;
  f.perm = Permutation::identity(5);
  f.tier_mask.assign(3, 0);
  EXPECT_EQ(enumerate_sets(build_cts(f), 10), std::nullopt);
}

TEST(IsElementary, Cases) {
  json sec2 = json::parse(worked::k_section2_json);
  Cts z = build_cts(ctf_from_json(
      {{"permutation", {1, 2, 3, 4, 5}}, {"tiers", sec2.at("ctf_tiers")}}));
  EXPECT_FALSE(is_elementary(z));  // two lines per tier
  Cts single;
  single.perm = Permutation::identity(5);
  single.tier_mask = {1 << 0b010, 1 << 0b101, 1 << 0b011};
  EXPECT_TRUE(is_elementary(single));
  Cts empty;
  empty.perm = Permutation::identity(5);
  empty.tier_mask = {0, 0, 0};
  empty.empty_flag = true;
  EXPECT_FALSE(is_elementary(empty));
}

// Coded sets of the CTS are exactly the satisfying sets of the CTF.
TEST(BuildCts, SoundAgainstExhaustiveEvaluation) {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    int n = 4 + static_cast<int>(seed % 9);  // 4..12
    CtFormula f = random_ctf(n, 9000 + seed, 25);
    Cts s = build_cts(f);
    auto sets = enumerate_sets(s, size_t{1} << n);
    ASSERT_TRUE(sets.has_value());
    EXPECT_EQ(as_set(*sets), ctf_brute_sets(f, n)) << "seed " << seed;
  }
}

TEST(Unify, ReproducesBundledTables) {
  CtsSystem t3 = worked::cts_system(worked::k_table3_json);
  CtsSystem t4 = worked::cts_system(worked::k_table4_json);
  CtsSystem t6 = worked::cts_system(worked::k_table6_json);
  UnifyResult two = unify(CtsSystem{{t3.structures[0], t3.structures[1]}, 8});
  ASSERT_FALSE(two.empty);
  EXPECT_EQ(two.system.structures[0], t4.structures[0]);
  EXPECT_EQ(two.system.structures[1], t4.structures[1]);
  UnifyResult three = unify(t3);
  ASSERT_FALSE(three.empty);
  for (int i = 0; i < 3; ++i)
    EXPECT_EQ(three.system.structures[i], t6.structures[i]);
}

TEST(Unify, SingleStructureUnchanged) {
  CtsSystem t3 = worked::cts_system(worked::k_table3_json);
  UnifyResult r = unify(CtsSystem{{t3.structures[0]}, 8});
  EXPECT_FALSE(r.empty);
  EXPECT_EQ(r.system.structures[0], t3.structures[0]);
}

TEST(Unify, EmptyInputStructure) {
  Cts empty;
  empty.perm = Permutation::identity(5);
  empty.tier_mask = {0, 0, 0};
  empty.empty_flag = true;
  UnifyResult r = unify(CtsSystem{{empty}, 5});
  EXPECT_TRUE(r.empty);
}

TEST(Unify, ConstantConflictEmptiesSystem) {
  // x1 constant 0 in one structure, constant 1 in the other
  Cts a, b;
  a.perm = Permutation::identity(4);
  a.tier_mask = {(1 << 0b000) | (1 << 0b011), (1 << 0b000) | (1 << 0b110)};
  b.perm = Permutation::identity(4);
  b.tier_mask = {(1 << 0b100) | (1 << 0b111), (1 << 0b000) | (1 << 0b110)};
  UnifyResult r = unify(CtsSystem{{clear(a), clear(b)}, 4});
  EXPECT_TRUE(r.empty);
}

TEST(Unify, StructureOrderDoesNotChangeFixpoint) {
  CtsSystem t3 = worked::cts_system(worked::k_table3_json);
  UnifyResult fwd = unify(t3);
  CtsSystem rev{{t3.structures[2], t3.structures[1], t3.structures[0]}, 8};
  UnifyResult bwd = unify(rev);
  ASSERT_FALSE(fwd.empty);
  ASSERT_FALSE(bwd.empty);
  for (int i = 0; i < 3; ++i)
    EXPECT_EQ(fwd.system.structures[i], bwd.system.structures[2 - i]);
}

// Joint satisfying sets survive unification; outputs are substructures.
TEST(Unify, PreservesJointSetsOnRandomSystems) {
  int nonempty = 0;
  for (uint64_t seed = 0; seed < 40; ++seed) {
    int n = 4 + static_cast<int>(seed % 7);  // 4..10
    int q = 2 + static_cast<int>(seed % 2);
    CtsSystem sys;
    sys.var_count = n;
    bool skip = false;
    for (int i = 0; i < q; ++i) {
      Cts s = build_cts(random_ctf(n, seed * 31 + i, 18));
      if (s.empty_flag) skip = true;
      sys.structures.push_back(std::move(s));
    }
    if (skip) continue;
    auto joint_of = [&](const CtsSystem& s) {
      std::set<std::string> joint;
      bool first = true;
      for (const Cts& c : s.structures) {
        auto sets = enumerate_sets(c, size_t{1} << n);
        std::set<std::string> got = as_set(*sets);
        if (first) joint = got, first = false;
        else {
          std::set<std::string> inter;
          std::set_intersection(joint.begin(), joint.end(), got.begin(),
                                got.end(), std::inserter(inter, inter.begin()));
          joint = inter;
        }
      }
      return joint;
    };
    std::set<std::string> before = joint_of(sys);
    UnifyResult r = unify(sys);
    if (r.empty) {
      EXPECT_TRUE(before.empty()) << "seed " << seed;
      continue;
    }
    ++nonempty;
    EXPECT_EQ(joint_of(r.system), before) << "seed " << seed;
    for (size_t i = 0; i < sys.structures.size(); ++i)
      for (int t = 0; t < sys.structures[i].tier_count(); ++t)
        EXPECT_EQ(r.system.structures[i].tier_mask[t] &
                      sys.structures[i].tier_mask[t],
                  r.system.structures[i].tier_mask[t])
            << "output must be a substructure";
  }
  EXPECT_GT(nonempty, 5);
}

TEST(Cts, JsonRoundTrip) {
  CtsSystem t4 = worked::cts_system(worked::k_table4_json);
  for (const Cts& s : t4.structures)
    EXPECT_EQ(cts_from_json(to_json(s)), s);
}
