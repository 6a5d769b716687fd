#include <gtest/gtest.h>

#include "dfixed/betti.hpp"
#include "dfixed/dfixed.hpp"
#include "support.hpp"

using namespace dfx;
using testing_support::ideal;
using testing_support::mono;

namespace {

const DSequence kD = DSequence::from({1, 2, 4, 12});

using Entries = std::map<std::pair<std::size_t, std::int64_t>, std::int64_t>;

// sum_i (-1)^i beta_{i,j} is the t^j coefficient of (1-t)^n H(t).
void expect_euler(const BettiTable& table, const MonomialIdeal& I) {
  const auto n = static_cast<std::int64_t>(I.n());
  for (std::int64_t j = 0; j <= table.max_degree; ++j) {
    std::int64_t lhs = 0;
    for (std::size_t i = 0; i <= I.n(); ++i) lhs += (i % 2 ? -1 : 1) * table.at(i, j);
    std::int64_t rhs = 0;
    for (std::int64_t k = std::max<std::int64_t>(0, j - n); k <= j; ++k)
      rhs += ((j - k) % 2 ? -1 : 1) * static_cast<std::int64_t>(binomial(n, j - k)) * hilbert_function(I, k);
    EXPECT_EQ(lhs, rhs) << "degree " << j;
  }
}

void expect_first_column(const BettiTable& table, const MonomialIdeal& I) {
  std::map<std::int64_t, std::int64_t> by_degree;
  for (const auto& g : I.gens()) ++by_degree[g.degree()];
  for (std::int64_t j = 0; j <= table.max_degree; ++j)
    EXPECT_EQ(table.at(1, j), by_degree.count(j) ? by_degree[j] : 0) << "degree " << j;
}

}  // namespace

TEST(Koszul, Subsets) {
  EXPECT_EQ(colex_subsets(3, 2), (std::vector<std::uint32_t>{3, 5, 6}));
  EXPECT_EQ(colex_subsets(3, 0), (std::vector<std::uint32_t>{0}));
  EXPECT_EQ(colex_subsets(4, 4), (std::vector<std::uint32_t>{15}));
  EXPECT_EQ(colex_subsets(4, 2).size(), 6u);
}

TEST(Koszul, BoundaryShapes) {
  auto m = koszul_boundary(maximal_ideal(2), 1, 1);
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 0u);

  auto ci = ideal(2, {"x1^2", "x2^2"});
  auto b3 = koszul_boundary(ci, 2, 3);
  EXPECT_EQ(b3.rows(), 2u);
  EXPECT_EQ(b3.cols(), 2u);
  EXPECT_EQ(rank_rational(b3), 2u);
  auto b4 = koszul_boundary(ci, 2, 4);
  EXPECT_EQ(b4.rows(), 1u);
  EXPECT_EQ(b4.cols(), 0u);
  EXPECT_EQ(koszul_piece_dimension(ci, 2, 4), 1);
  EXPECT_EQ(koszul_basis(ci, 1, 2).size(), 4u);
}

TEST(Koszul, BoundaryEntries) {
  // The x1^2 term of x1 e_{12} dies in S/I.
  auto I = ideal(2, {"x1^2"});
  auto basis = koszul_basis(I, 2, 3);
  auto m = koszul_boundary(I, 2, 3);
  ASSERT_EQ(m.rows(), basis.size());
  std::int64_t nonzero = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m.at(r, c)) {
        ++nonzero;
        EXPECT_TRUE(m.at(r, c) == 1 || m.at(r, c) == -1);
      }
  EXPECT_EQ(nonzero, 3);
}

TEST(BettiTable, MaximalIdeal) {
  auto t = betti_table(maximal_ideal(3));
  EXPECT_TRUE(t.complete);
  EXPECT_EQ(t.entries, (Entries{{{0, 0}, 1}, {{1, 1}, 3}, {{2, 2}, 3}, {{3, 3}, 1}}));
  EXPECT_EQ(reg_from_betti(t).ideal, 1);
}

TEST(BettiTable, SmallIdeals) {
  auto sq = power(maximal_ideal(2), 2);
  EXPECT_EQ(betti_table(sq).entries, (Entries{{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}}));
  auto ci = ideal(2, {"x1^2", "x2^3"});
  EXPECT_EQ(betti_table(ci).entries, (Entries{{{0, 0}, 1}, {{1, 2}, 1}, {{1, 3}, 1}, {{2, 5}, 1}}));
  EXPECT_EQ(reg_from_betti(betti_table(ci)).quotient, 3);
  auto zero = betti_table(MonomialIdeal::zero(3));
  EXPECT_EQ(zero.entries, (Entries{{{0, 0}, 1}}));
  EXPECT_THROW(reg_from_betti(zero), DomainError);
  auto unit = betti_table(MonomialIdeal::unit(2));
  EXPECT_TRUE(unit.entries.empty());
}

TEST(BettiTable, SingleBlockPrincipal) {
  auto I = principal_ideal(PrincipalInput(kD, 3, {{3, 21}}));
  BettiOptions opts;
  opts.max_degree = 40;
  opts.regularity_bound = 34;
  auto t = betti_table(I, opts);
  EXPECT_FALSE(t.complete);
  EXPECT_TRUE(t.certified());
  EXPECT_EQ(t.at(1, 21), 54);
  EXPECT_EQ(t.at(2, 22), 54);
  EXPECT_EQ(t.at(3, 23), 18);
  EXPECT_EQ(t.at(2, 24), 27);
  EXPECT_EQ(t.at(3, 28), 9);
  EXPECT_EQ(t.at(3, 36), 1);
  EXPECT_EQ(reg_from_betti(t).ideal, 34);
  EXPECT_EQ(extremal_from_betti(t), (std::vector<ExtremalEntry>{{3, 33, 1}}));
  expect_euler(t, I);
  expect_first_column(t, I);
  std::int64_t totals[4] = {0, 0, 0, 0};
  for (const auto& [key, value] : t.entries) totals[key.first] += value;
  EXPECT_EQ(totals[1], 54);
  EXPECT_EQ(totals[2], 81);
  EXPECT_EQ(totals[3], 28);
}

TEST(BettiTable, TwoBlockPrincipal) {
  auto I = principal_ideal(PrincipalInput(kD, 3, {{2, 9}, {3, 16}}));
  BettiOptions opts;
  opts.max_degree = 37;
  opts.regularity_bound = 75;
  auto t = betti_table(I, opts);
  EXPECT_FALSE(t.certified());
  EXPECT_THROW(reg_from_betti(t), DomainError);
  opts.regularity_bound = 34;
  t = betti_table(I, opts);
  EXPECT_EQ(reg_from_betti(t).ideal, 34);
  EXPECT_EQ(extremal_from_betti(t), (std::vector<ExtremalEntry>{{3, 33, 5}}));
  expect_euler(t, I);
  expect_first_column(t, I);
}

TEST(BettiTable, StrategiesAgree) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 25; ++k) {
    auto I = testing_support::random_ideal(rng, 3, 4, 3);
    if (I.is_unit()) continue;
    BettiOptions a;
    BettiOptions b;
    b.strategy = BettiStrategy::whole_degree;
    auto ta = betti_table(I, a);
    EXPECT_EQ(ta, betti_table(I, b));
    expect_euler(ta, I);
    expect_first_column(ta, I);
  }
}

TEST(BettiTable, Characteristics) {
  auto I = ideal(3, {"x1^2", "x1*x2", "x2^3", "x1*x3^2", "x3^4"});
  auto base = betti_table(I).entries;
  for (std::int64_t p : {0LL, 2LL, 3LL, 65537LL}) {
    BettiOptions o;
    o.characteristic = p;
    EXPECT_EQ(betti_table(I, o).entries, base) << p;
  }
  BettiOptions bad;
  bad.characteristic = 6;
  EXPECT_THROW(betti_table(I, bad), DomainError);
}

TEST(BettiTable, Progress) {
  std::size_t calls = 0;
  std::size_t last_done = 0, last_total = 0;
  BettiOptions o;
  o.progress = [&](std::size_t done, std::size_t total) {
    ++calls;
    EXPECT_LE(done, total);
    last_done = done;
    last_total = total;
  };
  betti_table(power(maximal_ideal(3), 2), o);
  EXPECT_GT(calls, 0u);
  EXPECT_EQ(last_done, last_total);
}

TEST(BettiTable, Format) {
  auto text = format_betti_table(betti_table(power(maximal_ideal(2), 2)));
  EXPECT_NE(text.find("total:"), std::string::npos);
  EXPECT_NE(text.find("0:"), std::string::npos);
  EXPECT_NE(text.find("1:"), std::string::npos);
  EXPECT_NE(text.find('.'), std::string::npos);
}
