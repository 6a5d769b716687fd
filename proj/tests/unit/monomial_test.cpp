#include <gtest/gtest.h>

#include "dfixed/monomial.hpp"

using namespace dfx;

TEST(Monomial, Basics) {
  Monomial m{2, 0, 3};
  EXPECT_EQ(m.degree(), 5);
  EXPECT_EQ(m.n(), 3u);
  EXPECT_EQ(m.top_variable(), 2u);
  EXPECT_FALSE(Monomial::unit(3).top_variable());
  EXPECT_TRUE(Monomial::unit(2).is_unit());
  EXPECT_THROW(Monomial({1, -1}), DomainError);
  EXPECT_EQ(Monomial::power(3, 1, 4), (Monomial{0, 4, 0}));
  EXPECT_THROW(Monomial::power(3, 3, 1), DomainError);
}

TEST(Monomial, Arithmetic) {
  Monomial a{2, 1, 0};
  Monomial b{1, 3, 2};
  EXPECT_EQ(a * b, (Monomial{3, 4, 2}));
  EXPECT_EQ(lcm(a, b), (Monomial{2, 3, 2}));
  EXPECT_EQ(gcd(a, b), (Monomial{1, 1, 0}));
  EXPECT_TRUE(gcd(a, b).divides(a));
  EXPECT_FALSE(a.divides(b));
  EXPECT_EQ((a * b).divide(b), a);
  EXPECT_THROW(a.divide(b), DomainError);
  EXPECT_THROW(a * Monomial({1, 1}), DomainError);
}

TEST(Monomial, CanonicalOrder) {
  std::vector<Monomial> deg2 = monomials_of_degree(2, 2);
  ASSERT_EQ(deg2.size(), 3u);
  EXPECT_EQ(deg2[0], (Monomial{2, 0}));
  EXPECT_EQ(deg2[1], (Monomial({1, 1})));
  EXPECT_EQ(deg2[2], (Monomial{0, 2}));
  EXPECT_TRUE(canonical_less(Monomial{0, 1}, Monomial{2, 0}));
  EXPECT_TRUE(canonical_less(Monomial{2, 0}, Monomial({1, 1})));
  EXPECT_FALSE(canonical_less(Monomial({1, 1}), Monomial{1, 1}));
}

TEST(Monomial, EnumerationCountsAndOrder) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::int64_t deg = 0; deg <= 8; ++deg) {
      auto all = monomials_of_degree(n, deg);
      EXPECT_EQ(static_cast<std::int64_t>(all.size()), count_monomials(n, deg));
      for (std::size_t k = 1; k < all.size(); ++k) EXPECT_TRUE(canonical_less(all[k - 1], all[k]));
      for (const auto& m : all) EXPECT_EQ(m.degree(), deg);
    }
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(4, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(40, 20), 137846528820LL);
}

TEST(Monomial, HashDistinguishes) {
  MonomialHash h;
  EXPECT_EQ(h(Monomial{1, 2}), h(Monomial{1, 2}));
  EXPECT_NE(h(Monomial{1, 2}), h(Monomial{2, 1}));
}
