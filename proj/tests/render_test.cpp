#include "ctsat/render.hpp"

#include "ctsat/verify.hpp"
#include "gtest/gtest.h"

using namespace ctsat;

TEST(Render, TabularLayout) {
  TabularFormula f = to_tabular(
      parse_dimacs(std::string("p cnf 5 3\n-1 2 -4 0\n2 3 -5 0\n-3 -4 5 0\n")));
  EXPECT_EQ(render_tabular(f, var_names(5)),
            " a b c d e\n"
            " 1 0   1\n"
            "   0 0   1\n"
            "     1 1 0\n");
}

TEST(Render, StructureWithRemovalMarks) {
  json sec2 = json::parse(worked::k_section2_json);
  CtFormula f1 = ctf_from_json(
      {{"permutation", {1, 2, 3, 4, 5}}, {"tiers", sec2.at("ctf_tiers")}});
  Cts pre;
  pre.perm = f1.perm;
  for (uint8_t m : f1.tier_mask) pre.tier_mask.push_back(~m);
  Cts z = build_cts(f1);
  std::vector<uint8_t> marks;
  for (int t = 0; t < 3; ++t) marks.push_back(pre.tier_mask[t] & ~z.tier_mask[t]);
  std::string out = render_cts(pre, var_names(5), &marks);
  EXPECT_EQ(out,
            " a b c d e\n"
            " 0 1 0     -\n"
            " 0 1 1\n"
            " 1 0 0\n"
            " 1 1 0     -\n"
            "   0 0 1\n"
            "   0 1 0   -\n"
            "   0 1 1   -\n"
            "   1 1 0\n"
            "     0 0 0 -\n"
            "     0 0 1 -\n"
            "     0 1 1\n"
            "     1 0 1\n"
            "     1 1 0 -\n");
  EXPECT_EQ(render_cts(z, var_names(5)),
            " a b c d e\n"
            " 0 1 1\n"
            " 1 0 0\n"
            "   0 0 1\n"
            "   1 1 0\n"
            "     0 1 1\n"
            "     1 0 1\n");
}

TEST(Render, CouplesWithTwinsLabels) {
  CcsSystem t7 = worked::ccs_system(worked::k_table7_json);
  std::string g1 = render_ccs(t7.structures[0], var_names(8));
  EXPECT_EQ(g1,
            "  a b c d e f g h\n"
            "  0 0\n"
            "  1 0\n"
            "    0 1\n"
            "      1 0\n"
            "      1 1\n"
            "v       0 1\n"
            "        1 1\n"
            "v         1 0\n"
            "          1 1\n"
            "            0 1\n"
            "            1 0\n"
            "              0 0\n"
            "              1 1\n");
  // second structure carries its own letter sequence, also starting at v
  std::string g2 = render_ccs(t7.structures[1], var_names(8));
  EXPECT_NE(g2.find("v"), std::string::npos);
}

TEST(Render, DeterministicOutput) {
  CcsSystem t7 = worked::ccs_system(worked::k_table7_json);
  EXPECT_EQ(render_ccs(t7.structures[1], var_names(8)),
            render_ccs(t7.structures[1], var_names(8)));
}

TEST(Render, EmptyStructure) {
  Cts empty;
  empty.perm = Permutation::identity(5);
  empty.tier_mask = {0, 0, 0};
  empty.empty_flag = true;
  EXPECT_EQ(render_cts(empty, var_names(5)), "(empty structure)\n");
}
