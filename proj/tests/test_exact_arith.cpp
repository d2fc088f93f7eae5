#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fractree/error.hpp"
#include "fractree/exact_arith.hpp"
#include "fractree/oracles.hpp"
#include "support.hpp"

using namespace fractree;

TEST(FactoredExpand, EmptyProductIsOne) { EXPECT_EQ(factored_expand(FactoredCount{}), 1); }

TEST(FactoredExpand, SmallCounts) {
  EXPECT_EQ(factored_expand(FactoredCount{{3, 4}, {2, 1}}), 162);
  EXPECT_EQ(factored_expand(FactoredCount{{45, 6}, {2, 4}}), BigInt("132860250000"));
  EXPECT_EQ(factored_expand(FactoredCount{{3, 286}, {2, 88}}), pow_big(3, 286) * pow_big(2, 88));
}

TEST(FactoredExpand, RefusesPastCap) {
  const FactoredCount huge{{3, BigInt("100000000000")}};
  EXPECT_THROW(factored_expand(huge), OverflowCap);
  EXPECT_THROW(factored_expand(FactoredCount{{2, 100}}, 50.0), OverflowCap);
  EXPECT_NO_THROW(factored_expand(FactoredCount{{2, 100}}, 101.0));
}

TEST(FactoredCount, DropsZeroExponentsAndMergesBases) {
  FactoredCount c{{5, 0}, {7, 2}, {7, 3}};
  EXPECT_EQ(c.factors().size(), 1U);
  EXPECT_EQ(c.exponent_of(7), 5);
  EXPECT_EQ(c.exponent_of(5), 0);
  EXPECT_THROW(c.multiply(7, -1), std::domain_error);
}

TEST(FactoredCount, EqualityIgnoresBaseChoice) {
  EXPECT_EQ((FactoredCount{{4, 3}}), (FactoredCount{{2, 6}}));
  EXPECT_EQ((FactoredCount{{6, 2}, {2, 1}}), (FactoredCount{{2, 3}, {3, 2}}));
  EXPECT_EQ((FactoredCount{{45, 6}}), (FactoredCount{{3, 12}, {5, 6}}));
  EXPECT_NE((FactoredCount{{45, 6}}), (FactoredCount{{3, 12}, {5, 5}}));
  EXPECT_NE((FactoredCount{{12, 1}}), (FactoredCount{{2, 1}, {3, 2}}));
  EXPECT_EQ((FactoredCount{{6, 1}}), (FactoredCount{{2, 1}, {3, 1}}));
  EXPECT_EQ((FactoredCount{{36, 2}, {10, 1}}), (FactoredCount{{2, 5}, {3, 4}, {5, 1}}));
}

TEST(FactoredCount, EqualityMatchesExpansion) {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> base(2, 30);
  std::uniform_int_distribution<int> exponent(0, 4);
  for (int trial = 0; trial < 300; ++trial) {
    FactoredCount a;
    FactoredCount b;
    for (int k = 0; k < 3; ++k) {
      a.multiply(base(rng), exponent(rng));
      b.multiply(base(rng), exponent(rng));
    }
    EXPECT_EQ(a == b, factored_expand(a) == factored_expand(b)) << a.to_string() << " vs " << b.to_string();
    FactoredCount c;
    for (const auto& [p, e] : a.factors()) c.multiply(p * p, e);
    FactoredCount a2 = a;
    a2.merge(a);
    EXPECT_EQ(c, a2);
  }
}

TEST(FactoredCount, ToString) {
  EXPECT_EQ((FactoredCount{{3, 16}, {2, 5}}).to_string(), "2^5*3^16");
  EXPECT_EQ(FactoredCount{}.to_string(), "1");
}

TEST(FactoredCount, MergeIsMultiplicative) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> base(2, 40);
  std::uniform_int_distribution<int> exponent(0, 12);
  for (int trial = 0; trial < 50; ++trial) {
    FactoredCount a;
    FactoredCount b;
    for (int k = 0; k < 3; ++k) {
      a.multiply(base(rng), exponent(rng));
      b.multiply(base(rng), exponent(rng));
    }
    FactoredCount ab = a;
    ab.merge(b);
    EXPECT_EQ(factored_expand(ab), factored_expand(a) * factored_expand(b));
    EXPECT_EQ(factored_expand(ab.coprime_normalized()), factored_expand(ab));
  }
}

TEST(FactoredLog, KnownValues) {
  EXPECT_DOUBLE_EQ(factored_log(FactoredCount{}), 0.0);
  EXPECT_NEAR(factored_log(FactoredCount{{3, 4}, {2, 1}}), 4 * std::log(3.0) + std::log(2.0), 1e-12);
  EXPECT_NEAR(factored_log(FactoredCount{{3, 67}, {2, 21}}), 67 * std::log(3.0) + 21 * std::log(2.0), 1e-12);
}

TEST(FactoredLog, AgreesWithExpansion) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> base(2, 1000);
  std::uniform_int_distribution<int> exponent(0, 400);
  for (int trial = 0; trial < 40; ++trial) {
    FactoredCount c;
    for (int k = 0; k < 4; ++k) c.multiply(base(rng), exponent(rng));
    if (c.empty()) continue;
    const double direct = factored_log(c);
    EXPECT_LE(std::fabs(direct - ln_big(factored_expand(c))), 1e-9 * direct);
  }
}

TEST(FactoredLog, HugeExponentsWithoutExpansion) {
  const FactoredCount c{{3, BigInt("123456789012345678901234567890")}};
  EXPECT_NEAR(factored_log(c) / (1.2345678901234568e29 * std::log(3.0)), 1.0, 1e-12);
}

TEST(Rational, AlwaysReduced) {
  const Rational r = make_rational(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(to_fraction_string(Rational(4)), "4/1");
  EXPECT_EQ(to_fraction_string(parse_rational("10/4")), "5/2");
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> v(-500, 500);
  Rational acc(0);
  for (int k = 0; k < 200; ++k) {
    long den = v(rng);
    if (den == 0) den = 1;
    acc += make_rational(v(rng), den);
    acc *= make_rational(v(rng) | 1, 7);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), acc.get_num_mpz_t(), acc.get_den_mpz_t());
    EXPECT_TRUE(acc == 0 || g == 1);
    EXPECT_GT(acc.get_den(), 0);
  }
}

TEST(Bareiss, SmallMatrices) {
  EXPECT_EQ(bareiss_determinant(IntegerMatrix{{2, -1}, {-1, 2}}), 3);
  EXPECT_EQ(bareiss_determinant(IntegerMatrix(0)), 1);
  IntegerMatrix id(5);
  for (std::size_t k = 0; k < 5; ++k) id.at(k, k) = 1;
  EXPECT_EQ(bareiss_determinant(id), 1);
  // W_4 Laplacian minor with the hub removed: rim diagonal 3, rim cycle -1.
  EXPECT_EQ(bareiss_determinant(IntegerMatrix{{3, -1, 0, -1}, {-1, 3, -1, 0}, {0, -1, 3, -1}, {-1, 0, -1, 3}}), 45);
}

TEST(Bareiss, ZeroPivotNeedsSwap) {
  EXPECT_EQ(bareiss_determinant(IntegerMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(bareiss_determinant(IntegerMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}), -1);
  EXPECT_EQ(bareiss_determinant(IntegerMatrix{{0, 2, 1}, {0, 4, 2}, {3, 1, 1}}), 0);
  EXPECT_EQ(bareiss_determinant(IntegerMatrix{{1, 2}, {2, 4}}), 0);
}

TEST(Bareiss, RandomMatricesAgreeWithLeibniz) {
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<std::size_t> order(0, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const IntegerMatrix m = oracle::random_matrix(rng, order(rng), -9, 9);
    EXPECT_EQ(bareiss_determinant(m), testsupport::leibniz_determinant(m)) << "trial " << trial;
  }
}

TEST(Bareiss, SparseSingularMatricesAgreeWithLeibniz) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> entry(-1, 1);
  std::bernoulli_distribution sparse(0.6);
  for (int trial = 0; trial < 100; ++trial) {
    IntegerMatrix m(1 + trial % 6);
    for (std::size_t r = 0; r < m.order(); ++r) {
      for (std::size_t c = 0; c < m.order(); ++c) m.at(r, c) = sparse(rng) ? 0 : entry(rng);
    }
    EXPECT_EQ(bareiss_determinant(m), testsupport::leibniz_determinant(m)) << "trial " << trial;
  }
}

TEST(Oracles, CofactorAgreesWithLeibniz) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const IntegerMatrix m = oracle::random_matrix(rng, static_cast<std::size_t>(trial % 6), -9, 9);
    EXPECT_EQ(oracle::cofactor_determinant(m), testsupport::leibniz_determinant(m));
  }
}

TEST(BigIntHelpers, DecimalAndDouble) {
  EXPECT_EQ(to_decimal(pow_big(2, 100)), "1267650600228229401496703205376");
  EXPECT_NEAR(to_double(pow_big(10, 300)), 1e300, 1e285);
  EXPECT_NEAR(ln_big(pow_big(7, 5000)), 5000 * std::log(7.0), 1e-9);
  EXPECT_EQ(choose2(BigInt(6)), 15);
}
