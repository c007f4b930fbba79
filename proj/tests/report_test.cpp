#include <gtest/gtest.h>

#include <sstream>

#include "hublab/report.hpp"

using namespace hublab;

TEST(Decimal, SixSignificantDigits) {
  EXPECT_EQ(decimal(Rational(3, 2)), "1.5");
  EXPECT_EQ(decimal(Rational(1, 3)), "0.333333");
  EXPECT_EQ(decimal(Rational(6, 5)), "1.2");
  EXPECT_EQ(decimal(Rational(2000000, 3)), "666667");
  EXPECT_EQ(exact(Rational(6, 4)), "3/2");
}

TEST(BoundReport, TableEntries) {
  auto r = make_bound_report(3);
  ASSERT_EQ(r.rows.size(), 4u);
  for (const auto& row : r.rows) EXPECT_EQ(row.psi, row.n_k * row.y_star);
  EXPECT_EQ(r.rows[1].psi, 16);
  EXPECT_EQ(r.argmax_k, 1);
  EXPECT_EQ(r.max_psi, 16);
  EXPECT_EQ(r.hhl_size, 27);
  EXPECT_EQ(r.halfsplit_size, 40);
  EXPECT_EQ(r.halfsplit_formula, 48);
  EXPECT_FALSE(r.ropt);
  EXPECT_TRUE(r.sandwiches.empty());
}

TEST(BoundReport, SelfPairsOffDropsKZero) {
  auto r = make_bound_report(2, {false, false, SelfPairs::off});
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.rows.front().k, 1);
}

TEST(BoundReport, WithLpAndOracle) {
  auto r = make_bound_report(2, {true, true, SelfPairs::on});
  ASSERT_TRUE(r.ropt && r.lopt_dual && r.lopt_primal && r.opt && r.opt_hhl);
  EXPECT_EQ(*r.ropt, 8);
  EXPECT_EQ(*r.lopt_dual, 8);
  EXPECT_EQ(*r.lopt_primal, 8);
  EXPECT_EQ(*r.opt, 9u);
  EXPECT_EQ(*r.opt_hhl, 9u);
  EXPECT_EQ(r.sandwiches.size(), 5u);
  for (const auto& s : r.sandwiches) EXPECT_TRUE(s.holds) << s.statement;
  EXPECT_TRUE(r.skipped.empty());
}

TEST(BoundReport, SkipsWhatDoesNotFit) {
  auto r = make_bound_report(5, {true, true, SelfPairs::on});
  EXPECT_FALSE(r.ropt);
  EXPECT_FALSE(r.opt);
  EXPECT_EQ(r.skipped.size(), 5u);
}

TEST(BoundReport, RegularSandwichUpToFour) {
  // Values also reproduced by an independent floating-point LP solve.
  const std::vector<Rational> ropt{1, 3, 8, 24, 64};
  for (int d = 0; d <= 4; ++d) {
    const Rational value = solve(build_regular_lp(d)).value;
    EXPECT_EQ(value, ropt[d]) << d;
    const Rational top = psi_argmax(d).value;
    EXPECT_LE(top, value);
    EXPECT_LE(value, (d + 1) * top);
  }
}

TEST(BoundReport, TextOutput) {
  std::ostringstream out;
  print_bound_report(out, make_bound_report(2));
  const std::string expected =
      "bounds d=2 self-pairs=on\n"
      "k  N_k  y_star     psi\n"
      "0  4    1          4\n"
      "1  4    3/2 (1.5)  6\n"
      "2  2    2          4\n"
      "argmax k*:                   1\n"
      "max psi:                     6\n"
      "HHL optimum 3^d:             9\n"
      "half-split HL:               12\n"
      "half-split HL with overlap:  16\n";
  EXPECT_EQ(out.str(), expected);
}

TEST(BoundReport, Tsv) {
  std::ostringstream out;
  print_bound_tsv(out, make_bound_report(2));
  EXPECT_EQ(out.str(), "k\tN_k\ty_star\tpsi\n0\t4\t1\t4\n1\t4\t3/2\t6\n2\t2\t2\t4\n");
}

TEST(GapReport, FinalLineAtTwelve) {
  GapOptions opts;
  opts.materialize_max = 10;
  auto rows = make_gap_report(12, opts);
  ASSERT_EQ(rows.size(), 13u);
  EXPECT_TRUE(rows[10].verified);
  EXPECT_EQ(rows[10].check, "sampled");
  EXPECT_EQ(rows[8].check, "exhaustive");
  EXPECT_FALSE(rows[11].materialized);
  std::ostringstream out;
  print_gap_report(out, rows);
  const std::string text = out.str();
  const std::string last = "HHL lower bound 531441 vs half-split HL 520192 at d=12\n";
  ASSERT_GE(text.size(), last.size());
  EXPECT_EQ(text.substr(text.size() - last.size()), last);
  EXPECT_NE(text.find("first d with half-split HL below 3^d: 12"), std::string::npos);
  EXPECT_NE(text.find("formula"), std::string::npos);
}

TEST(GapReport, FormulaOnlyRowsBeyondMaterialization) {
  GapOptions opts;
  opts.materialize_max = -1;
  auto rows = make_gap_report(20, opts);
  for (const auto& r : rows) EXPECT_FALSE(r.materialized);
  EXPECT_EQ(rows[20].hhl, BigInt("3486784401"));
  EXPECT_LT(rows[20].halfsplit, rows[20].hhl);
}
