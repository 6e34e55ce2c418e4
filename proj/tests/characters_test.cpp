#include <gtest/gtest.h>

#include "weylkit/weylkit.hpp"

using namespace wk;

namespace {

Weight w(std::vector<int> c) { return Weight(std::move(c)); }

std::vector<Weight> admissible_pairs_flat(int n, int ht_max, std::vector<Weight>& lams) {
  // returns parallel arrays of (nu, lambda) with ht(nu+lambda) <= ht_max
  std::vector<Weight> nus;
  for (const Weight& nu : dominant_weights(n, 0, ht_max))
    for (const Weight& la : dominant_weights(n, 0, ht_max - static_cast<int>(ht(nu))))
      if (is_admissible(nu, la)) {
        nus.push_back(nu);
        lams.push_back(la);
      }
  return nus;
}

TEST(macdonald, fundamental_and_zero) {
  Characters eng(3);
  for (int i = 0; i <= 3; ++i) {
    const SchurSeries& p = eng.macdonald_q0(Weight::fundamental(3, i));
    ASSERT_EQ(p.terms.size(), 1u);
    EXPECT_EQ(p.terms.begin()->first, Weight::fundamental(3, i));
    EXPECT_EQ(p.terms.begin()->second, QPoly::one());
  }
}

TEST(macdonald, adjoint_of_rank_two) {
  Characters eng(2);
  const SchurSeries& p = eng.macdonald_q0(w({1, 1}));
  EXPECT_EQ(p.terms.size(), 2u);
  EXPECT_EQ(p.coeff(w({1, 1})), QPoly::one());
  EXPECT_EQ(p.coeff(w({0, 0})), QPoly::q_power(1));
}

TEST(macdonald, leading_term_and_positive_grading) {
  // coefficient of s_nu is 1 and every lower coefficient has zero constant term
  for (int n = 1; n <= 3; ++n) {
    Characters eng(n);
    for (const Weight& nu : dominant_weights(n, 0, 4)) {
      const SchurSeries& p = eng.macdonald_q0(nu);
      EXPECT_EQ(p.coeff(nu), QPoly::one());
      EXPECT_TRUE(is_schur_positive(p));
      for (const auto& [mu, c] : p.terms) {
        if (mu != nu) {
          EXPECT_EQ(c.coeff(0), 0) << nu.str() << mu.str();
        }
      }
    }
  }
}

TEST(G_series, examples) {
  Characters e4(4);
  SchurSeries g = e4.G_series(w({1, 0, 0, 1}));
  ASSERT_EQ(g.terms.size(), 1u);
  EXPECT_EQ(g.coeff(w({1, 0, 0, 1})), QPoly::one());

  Characters e2(2);
  g = e2.G_series(w({2, 2}));
  EXPECT_EQ(g.terms.size(), 3u);
  EXPECT_EQ(g.coeff(w({2, 2})), QPoly::one());
  EXPECT_EQ(g.coeff(w({1, 1})), QPoly::q_power(1));
  EXPECT_EQ(g.coeff(w({0, 0})), QPoly::q_power(2));

  for (int i = 1; i <= 2; ++i) {
    g = e2.G_series(Weight::fundamental(2, i));
    ASSERT_EQ(g.terms.size(), 1u);
    EXPECT_EQ(g.coeff(Weight::fundamental(2, i)), QPoly::one());
  }
}

TEST(G_pair_series, reduces_to_macdonald_at_lambda_zero) {
  Characters eng(2);
  for (const Weight& nu : dominant_weights(2, 0, 4))
    EXPECT_EQ(eng.G_pair_series(nu, Weight::zero(2)), eng.macdonald_q0(nu));
}

TEST(G_pair_series, fixture_lines) {
  Characters eng(2);
  SchurSeries g = eng.G_pair_series(w({1, 1}), w({0, 2}));
  EXPECT_EQ(g.coeff(w({1, 3})), QPoly::one());
  EXPECT_EQ(g.coeff(w({2, 1})), QPoly::q_power(1));
  EXPECT_EQ(g.coeff(w({1, 0})), QPoly::q_power(2));
  EXPECT_EQ(g.coeff(w({0, 2})), qint(2).shifted(1));
  EXPECT_EQ(g.terms.size(), 4u);

  g = eng.G_pair_series(w({2, 0}), w({1, 1}));
  EXPECT_EQ(g.coeff(w({3, 1})), QPoly::one());
  EXPECT_EQ(g.coeff(w({1, 2})), qint(2).shifted(1));
  EXPECT_EQ(g.coeff(w({2, 0})), qint(2).shifted(1));
  EXPECT_EQ(g.coeff(w({0, 1})), qint(2).shifted(2));
  EXPECT_EQ(g.terms.size(), 4u);
}

TEST(positivity_and_constant_term, admissible_sweep_small) {
  for (int n = 1; n <= 3; ++n) {
    Characters eng(n);
    std::vector<Weight> lams;
    std::vector<Weight> nus = admissible_pairs_flat(n, 4, lams);
    for (size_t i = 0; i < nus.size(); ++i) {
      SchurSeries g = eng.G_pair_series(nus[i], lams[i]);
      EXPECT_TRUE(is_schur_positive(g)) << nus[i].str() << lams[i].str();
      auto q0 = g.at_q0();
      ASSERT_EQ(q0.size(), 1u) << nus[i].str() << lams[i].str();
      EXPECT_EQ(q0.begin()->first, nus[i] + lams[i]);
      EXPECT_EQ(q0.begin()->second, 1);
    }
  }
}

TEST(factorization, trivial_and_worked_cases) {
  Characters eng(2);
  for (const Weight& nu : dominant_weights(2, 0, 3)) {
    EXPECT_TRUE(eng.check_factorization(nu, Weight::zero(2)));
    EXPECT_TRUE(eng.check_factorization(Weight::zero(2), nu));
  }
  EXPECT_TRUE(eng.check_factorization(w({1, 1}), w({0, 2})));
}

TEST(roundtrip, closes_the_loop) {
  Characters e2(2);
  for (int i = 0; i <= 2; ++i)
    EXPECT_TRUE(e2.check_P_roundtrip(Weight::fundamental(2, i)));
  EXPECT_TRUE(e2.check_P_roundtrip(w({1, 1})));
  EXPECT_TRUE(e2.check_P_roundtrip(w({2, 2})));
  Characters e3(3);
  EXPECT_TRUE(e3.check_P_roundtrip(w({1, 1, 1})));
}

TEST(dimensions, examples) {
  for (int n = 1; n <= 4; ++n) {
    Characters eng(n);
    // dim M(w_i, 0) = binomial(n+1, i) and M(0, 2w_i) stays irreducible
    Int binom = 1;
    for (int i = 1; i <= n; ++i) {
      binom = binom * (n + 2 - i) / i;
      EXPECT_EQ(eng.dim_M(Weight::fundamental(n, i), Weight::zero(n)), binom);
      EXPECT_EQ(eng.dim_M(Weight::zero(n), 2 * Weight::fundamental(n, i)),
                weyl_dim(2 * Weight::fundamental(n, i)));
    }
  }
  Characters e2(2);
  Weight nu = w({1, 1}), la = w({0, 2});
  EXPECT_EQ(e2.dim_M(nu, la), e2.dim_M(nu, Weight::zero(2)) * e2.dim_M(Weight::zero(2), la));
}

TEST(dimensions, product_and_recursions_small) {
  for (int n = 1; n <= 2; ++n) {
    Characters eng(n);
    std::vector<Weight> lams;
    std::vector<Weight> nus = admissible_pairs_flat(n, 4, lams);
    for (size_t i = 0; i < nus.size(); ++i) {
      const Weight &nu = nus[i], &la = lams[i];
      Int total = eng.dim_M(nu, la);
      EXPECT_EQ(total, eng.dim_M(nu, Weight::zero(n)) * eng.dim_M(Weight::zero(n), la));
      for (int j = 1; j <= n; ++j) {
        if (nu.at(j) < 2) continue;
        Weight oj = Weight::fundamental(n, j);
        EXPECT_EQ(total, eng.dim_M(nu - 2 * oj, la + 2 * oj) +
                             eng.dim_M(nu - simple_root(n, j), la));
      }
    }
  }
}

}  // namespace
