#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dfx {

/// Row-major integer matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  bool is_zero() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

bool is_prime(std::int64_t p);

/// Rank over F_p by Gaussian elimination with row pivoting. p must be a
/// prime below 2^31.
std::size_t rank_mod_p(DenseMatrix m, std::int64_t p);

/// Rank over Q by fraction-free (Bareiss) elimination in 128-bit
/// arithmetic. Throws DomainError if an intermediate value overflows.
std::size_t rank_rational(DenseMatrix m);

/// characteristic 0 selects the rational path.
std::size_t rank(const DenseMatrix& m, std::int64_t characteristic);

/// Throws unless characteristic is 0 or a prime below 2^31.
void require_field(std::int64_t characteristic);

}  // namespace dfx
