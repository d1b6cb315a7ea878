#include "ctsat/couple_structures.hpp"

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

CtFormula random_ctf(int n, uint64_t seed, int fill_percent) {
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

}  // namespace

TEST(CtsToCcs, ReproducesBundledCouples) {
  CtsSystem t4 = worked::cts_system(worked::k_table4_json);
  CcsSystem t7 = worked::ccs_system(worked::k_table7_json);
  for (int i = 0; i < 2; ++i)
    EXPECT_EQ(cts_to_ccs(t4.structures[i]), t7.structures[i]);
  // the single v pair in G1: (d,e)=01 with (e,f)=10, i.e. boundary 4
  const Ccs& g1 = t7.structures[0];
  EXPECT_TRUE(g1.pair_forbidden(3, 0b01, 0b10));
  int total = 0;
  for (int j = 0; j + 1 < g1.tier_count(); ++j)
    total += __builtin_popcount(g1.forbidden[j]);
  EXPECT_EQ(total, 1);
}

TEST(CtsToCcs, SuperfluousSetControlledByLabels) {
  CtsSystem t4 = worked::cts_system(worked::k_table4_json);
  Ccs g1 = cts_to_ccs(t4.structures[0]);
  auto without = enumerate_sets(g1, false, 1 << 12);
  auto with = enumerate_sets(g1, true, 1 << 12);
  ASSERT_TRUE(without && with);
  EXPECT_TRUE(as_set(*without).count("00101011"));
  EXPECT_FALSE(as_set(*with).count("00101011"));
}

TEST(CtsToCcs, ElementaryStructureHasNoForbiddenPairs) {
  Cts s;
  s.perm = Permutation::identity(6);
  s.tier_mask = {1 << 0b010, 1 << 0b101, 1 << 0b011, 1 << 0b110};
  Ccs g = cts_to_ccs(s);
  for (uint16_t f : g.forbidden) EXPECT_EQ(f, 0);
  auto sets = enumerate_sets(g, true, 16);
  ASSERT_TRUE(sets.has_value());
  EXPECT_EQ(sets->size(), 1u);
}

TEST(CtsToCcs, EmptyStructureRejected) {
  Cts s;
  s.perm = Permutation::identity(5);
  s.tier_mask = {0, 0, 0};
  s.empty_flag = true;
  EXPECT_THROW(cts_to_ccs(s), std::invalid_argument);
}

// With labels the couples code exactly the triplet structure's sets; without
// them a superset.
TEST(CtsToCcs, LabelledSetsMatchSourceExactly) {
  int checked = 0;
  for (uint64_t seed = 0; seed < 80; ++seed) {
    int n = 4 + static_cast<int>(seed % 9);  // 4..12
    Cts s = build_cts(random_ctf(n, 4000 + seed, 22));
    if (s.empty_flag) continue;
    ++checked;
    Ccs g = cts_to_ccs(s);
    auto cts_sets = enumerate_sets(s, size_t{1} << n);
    auto labelled = enumerate_sets(g, true, size_t{1} << n);
    auto loose = enumerate_sets(g, false, size_t{1} << n);
    ASSERT_TRUE(cts_sets && labelled && loose);
    std::set<std::string> want = as_set(*cts_sets);
    EXPECT_EQ(as_set(*labelled), want) << "seed " << seed;
    std::set<std::string> superset = as_set(*loose);
    for (const std::string& w : want)
      EXPECT_TRUE(superset.count(w)) << "seed " << seed;
  }
  EXPECT_GT(checked, 30);
}

// Every forbidden pair concatenates to a triplet absent from the source.
TEST(CtsToCcs, ForbiddenPairsComeFromMissingTriplets) {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    int n = 5 + static_cast<int>(seed % 5);
    Cts s = build_cts(random_ctf(n, 8800 + seed, 25));
    if (s.empty_flag) continue;
    Ccs g = cts_to_ccs(s);
    for (int j = 0; j + 1 < g.tier_count(); ++j)
      for (int c1 = 0; c1 < 4; ++c1)
        for (int c2 = 0; c2 < 4; ++c2) {
          if (!g.pair_forbidden(j, c1, c2)) continue;
          EXPECT_EQ(c1 & 1, c2 >> 1) << "pair overlap must agree";
          EXPECT_FALSE(s.has(j, c1 << 1 | (c2 & 1)))
              << "forbidden pair exists in the source tier";
          EXPECT_TRUE(g.has(j, c1) && g.has(j + 1, c2))
              << "pairs reference present couples";
        }
  }
}

TEST(CcsClear, PreservesLabelledSets) {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    int n = 5 + static_cast<int>(seed % 4);
    Cts s = build_cts(random_ctf(n, 7100 + seed, 25));
    if (s.empty_flag) continue;
    // rebuild without clearing to feed ccs_clear something rawer
    Ccs g;
    g.perm = s.perm;
    g.tier_mask.assign(s.tier_count() + 1, 0);
    g.forbidden.assign(s.tier_count(), 0);
    for (int t = 0; t < s.tier_count(); ++t)
      for (int v = 0; v < 8; ++v)
        if (s.has(t, v)) {
          g.tier_mask[t] |= 1 << (v >> 1);
          g.tier_mask[t + 1] |= 1 << (v & 3);
        }
    for (int j = 0; j < s.tier_count(); ++j)
      for (int c1 = 0; c1 < 4; ++c1)
        for (int c2 = 0; c2 < 4; ++c2)
          if (g.has(j, c1) && g.has(j + 1, c2) && (c1 & 1) == (c2 >> 1) &&
              !s.has(j, c1 << 1 | (c2 & 1)))
            g.forbidden[j] |= 1 << (c1 * 4 + c2);
    Ccs cleared = ccs_clear(g);
    auto before = enumerate_sets(g, true, size_t{1} << n);
    auto after = enumerate_sets(cleared, true, size_t{1} << n);
    ASSERT_TRUE(before && after);
    EXPECT_EQ(as_set(*before), as_set(*after)) << "seed " << seed;
  }
}

TEST(CcsEnumerate, EmptyTierYieldsNothing) {
  Ccs g;
  g.perm = Permutation::identity(4);
  g.tier_mask = {0b0011, 0, 0b0101};
  g.forbidden = {0, 0};
  auto sets = enumerate_sets(g, true, 16);
  ASSERT_TRUE(sets.has_value());
  EXPECT_TRUE(sets->empty());
}

TEST(Ccs, JsonRoundTrip) {
  CcsSystem t7 = worked::ccs_system(worked::k_table7_json);
  for (const Ccs& g : t7.structures) EXPECT_EQ(ccs_from_json(to_json(g)), g);
}
