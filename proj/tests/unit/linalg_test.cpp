#include <gtest/gtest.h>

#include <random>

#include "dfixed/errors.hpp"
#include "dfixed/linalg.hpp"

using namespace dfx;

namespace {

DenseMatrix make(std::size_t r, std::size_t c, std::vector<std::int64_t> v) {
  DenseMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = v[i * c + j];
  return m;
}

// Determinant by cofactor expansion on chosen rows and columns.
wide_int minor_det(const DenseMatrix& m, const std::vector<std::size_t>& rows, std::vector<std::size_t> cols) {
  if (rows.size() == 1) return m.at(rows[0], cols[0]);
  std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
  wide_int total = 0;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::vector<std::size_t> sub = cols;
    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
    wide_int term = m.at(rows[0], cols[k]) * minor_det(m, rest, sub);
    total += (k % 2 ? -term : term);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Largest k with a nonzero k x k minor, optionally reduced mod p.
std::size_t minor_rank(const DenseMatrix& m, std::int64_t p) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    for (const auto& r : rs)
      for (const auto& c : cs) {
        wide_int det = minor_det(m, r, c);
        if (p ? det % p != 0 : det != 0) return k;
      }
  }
  return 0;
}

}  // namespace

TEST(Rank, SmallExamples) {
  auto diag = make(2, 2, {2, 0, 0, 3});
  EXPECT_EQ(rank_rational(diag), 2u);
  EXPECT_EQ(rank_mod_p(diag, 2), 1u);
  EXPECT_EQ(rank_mod_p(diag, 3), 1u);
  EXPECT_EQ(rank_mod_p(diag, 5), 2u);
  EXPECT_EQ(rank(make(2, 3, {1, 2, 3, 2, 4, 6}), 0), 1u);
  EXPECT_EQ(rank(DenseMatrix(3, 0), 0), 0u);
  EXPECT_EQ(rank(DenseMatrix(0, 4), 7), 0u);
  EXPECT_EQ(rank_mod_p(make(1, 2, {-1, 0}), 7), 1u);
  EXPECT_TRUE(DenseMatrix(2, 2).is_zero());
  EXPECT_FALSE(diag.is_zero());
}

TEST(Rank, AgreesWithMinors) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dim(1, 4), entry(-2, 2), zero(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    DenseMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = zero(rng) ? entry(rng) : 0;
    EXPECT_EQ(rank_rational(m), minor_rank(m, 0));
    for (std::int64_t p : {2, 3, 5, 1000003}) EXPECT_EQ(rank_mod_p(m, p), minor_rank(m, p)) << p;
  }
}

TEST(Rank, LargerKnownRank) {
  // Rows i*v + w for fixed v, w span a plane.
  DenseMatrix m(12, 9);
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 9; ++j) m.at(i, j) = static_cast<std::int64_t>(i) * static_cast<std::int64_t>(j * j + 1) + static_cast<std::int64_t>(3 * j) - 4;
  EXPECT_EQ(rank_rational(m), 2u);
  EXPECT_EQ(rank_mod_p(m, 1000003), 2u);
  for (std::size_t i = 0; i < 9; ++i) m.at(i, i) += 1;
  EXPECT_EQ(rank_rational(m), 9u);
}

TEST(Field, Checks) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(65537));
  EXPECT_TRUE(is_prime(1000003));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(1000001));
  EXPECT_NO_THROW(require_field(0));
  EXPECT_NO_THROW(require_field(32003));
  EXPECT_THROW(require_field(4), DomainError);
  EXPECT_THROW(require_field(-3), DomainError);
  EXPECT_THROW(require_field(2147483659LL), DomainError);
}
