#include <gtest/gtest.h>

#include "weylkit/weylkit.hpp"

using namespace wk;

namespace {

// independent oracle: Gaussian binomials from the Pascal recurrence
// [m s] = q^s [m-1 s] + [m-1 s-1]
QPoly pascal_qbinom(int m, int s) {
  if (s < 0 || s > m) return QPoly();
  std::vector<std::vector<QPoly>> c(m + 1, std::vector<QPoly>(m + 1));
  for (int i = 0; i <= m; ++i) {
    c[i][0] = QPoly::one();
    for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j].shifted(j) + c[i - 1][j - 1];
  }
  return c[m][s];
}

TEST(qint, examples) {
  EXPECT_EQ(qint(2), QPoly::q_power(0) + QPoly::q_power(1));
  EXPECT_TRUE(qint(0).is_zero());
  EXPECT_EQ(qint(1), QPoly::one());
  EXPECT_THROW(qint(-1), std::invalid_argument);
}

TEST(qbinom, conventions) {
  for (long n = 0; n <= 8; ++n) EXPECT_EQ(qbinom(n, 0), QPoly::one());
  EXPECT_TRUE(qbinom(3, -1).is_zero());
  EXPECT_TRUE(qbinom(3, 4).is_zero());
  EXPECT_TRUE(qbinom(-2, 1).is_zero());
}

TEST(qbinom, four_choose_two) {
  QPoly expect;
  expect.add_term(0, 1);
  expect.add_term(1, 1);
  expect.add_term(2, 2);
  expect.add_term(3, 1);
  expect.add_term(4, 1);
  EXPECT_EQ(qbinom(4, 2), expect);
  EXPECT_EQ(qbinom(4, 2), pascal_qbinom(4, 2));
}

TEST(qbinom, pascal_identity_and_symmetry_sweep) {
  for (int m = 0; m <= 12; ++m)
    for (int s = 0; s <= m; ++s) {
      QPoly lhs = qbinom(m, s);
      EXPECT_EQ(lhs, pascal_qbinom(m, s)) << m << "," << s;
      EXPECT_EQ(lhs, qbinom(m, m - s));
      EXPECT_TRUE(lhs.nonneg_coeffs());
      EXPECT_TRUE(lhs.nonneg_exps());
      if (m >= 1) {
        EXPECT_EQ(lhs, qbinom(m - 1, s).shifted(s) + qbinom(m - 1, s - 1));
      }
    }
}

TEST(ring_ops, examples) {
  QPoly one_plus_q = qint(2);
  QPoly sq = one_plus_q * one_plus_q;
  EXPECT_EQ(sq.coeff(0), 1);
  EXPECT_EQ(sq.coeff(1), 2);
  EXPECT_EQ(sq.coeff(2), 1);
  EXPECT_EQ(one_plus_q.shifted(2), QPoly::q_power(2) + QPoly::q_power(3));
  EXPECT_TRUE((QPoly::q_power(1) + (-QPoly::q_power(1))).is_zero());
}

TEST(ring_ops, laurent_shifts) {
  QPoly p = qint(3).shifted(-2);
  EXPECT_EQ(p.min_exp(), -2);
  EXPECT_EQ(p.max_exp(), 0);
  EXPECT_FALSE(p.nonneg_exps());
  EXPECT_EQ(p.shifted(2), qint(3));
}

TEST(eval_at_one, examples) {
  EXPECT_EQ((qint(3)).eval_at_one(), 3);
  EXPECT_EQ(qbinom(4, 2).eval_at_one(), 6);
  EXPECT_EQ(QPoly().eval_at_one(), 0);
}

TEST(exact_div, divides_and_rejects) {
  EXPECT_EQ(exact_div(qint(6), qint(3)), QPoly::one() + QPoly::q_power(3));
  EXPECT_THROW(exact_div(qint(4), qint(3)), std::logic_error);
  EXPECT_THROW(exact_div(QPoly::one(), QPoly()), std::invalid_argument);
}

TEST(canonical, no_zero_terms_stored) {
  QPoly p;
  p.add_term(5, 2);
  p.add_term(5, -2);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p, QPoly());
}

}  // namespace
