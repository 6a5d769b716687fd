#include "dfixed/linalg.hpp"

#include <algorithm>
#include <string>

#include "dfixed/errors.hpp"

namespace dfx {

bool DenseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v == 0; });
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t k = 2; k * k <= p; ++k)
    if (p % k == 0) return false;
  return true;
}

void require_field(std::int64_t characteristic) {
  if (characteristic == 0) return;
  if (characteristic > kMaxValue || !is_prime(characteristic))
    throw DomainError("characteristic must be 0 or a prime below 2^31, got " + std::to_string(characteristic));
}

namespace {

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1;
  std::int64_t base = a % p;
  for (std::int64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

}  // namespace

std::size_t rank_mod_p(DenseMatrix m, std::int64_t p) {
  require_field(p);
  if (p == 0) throw DomainError("rank_mod_p needs a prime");
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = ((m.at(r, c) % p) + p) % p;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m.at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m.at(pivot, k), m.at(rank, k));
    std::int64_t inv = inverse_mod(m.at(rank, c), p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::int64_t factor = m.at(r, c) * inv % p;
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k) m.at(r, k) = ((m.at(r, k) - factor * m.at(rank, k)) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(DenseMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<wide_int> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m.at(r, c);
  auto at = [&](std::size_t r, std::size_t c) -> wide_int& { return a[r * cols + c]; };
  const wide_int limit = static_cast<wide_int>(1) << 62;
  wide_int previous = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t k = 0; k < cols; ++k) std::swap(at(pivot, k), at(rank, k));
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        wide_int lhs = at(rank, c);
        wide_int rhs = at(r, k);
        wide_int v1 = at(r, c);
        wide_int v2 = at(rank, k);
        if (lhs > limit || lhs < -limit || rhs > limit || rhs < -limit || v1 > limit || v1 < -limit ||
            v2 > limit || v2 < -limit)
          throw DomainError("rational elimination overflow; use a prime characteristic");
        at(r, k) = (lhs * rhs - v1 * v2) / previous;
      }
      at(r, c) = 0;
    }
    previous = at(rank, c);
    ++rank;
  }
  return rank;
}

std::size_t rank(const DenseMatrix& m, std::int64_t characteristic) {
  require_field(characteristic);
  return characteristic == 0 ? rank_rational(m) : rank_mod_p(m, characteristic);
}

}  // namespace dfx
