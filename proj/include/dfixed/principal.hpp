#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dfixed/dseq.hpp"
#include "dfixed/monomial.hpp"

namespace dfx {

/// One factor x_i^alpha of the target monomial, i 1-based.
struct Block {
  std::size_t variable = 0;
  std::int64_t exponent = 0;

  friend bool operator==(const Block&, const Block&) = default;
};

/// Target monomial u = prod_q x_{i_q}^{alpha_q} with i_1 < ... < i_r <= n,
/// together with the digit data derived from d. Block indices q are 1-based
/// throughout, digit positions t run over 0..s.
class PrincipalInput {
 public:
  PrincipalInput(DSequence d, std::size_t n, std::vector<Block> blocks);
  static PrincipalInput from_monomial(const Monomial& u, const DSequence& d);

  const DSequence& d() const { return d_; }
  std::size_t n() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t r() const { return blocks_.size(); }
  std::size_t s() const { return d_.top(); }

  /// i_q.
  std::size_t variable(std::size_t q) const { return blocks_.at(q - 1).variable; }
  /// alpha_q.
  std::int64_t exponent(std::size_t q) const { return blocks_.at(q - 1).exponent; }
  /// alpha_{qt}.
  std::int64_t digit(std::size_t q, std::size_t t) const { return digits_.at(q - 1).at(t); }
  /// s_q, the largest t with alpha_{qt} != 0.
  std::size_t top_digit(std::size_t q) const;
  /// d_{qt} = sum_{e <= q} sum_{j >= t} alpha_{ej} d_j.
  std::int64_t tail_weight(std::size_t q, std::size_t t) const;
  /// D_q = d_{q s_q} + (i_q - 1)(d_{s_q} - 1).
  std::int64_t block_regularity(std::size_t q) const;

  Monomial monomial() const;
  std::int64_t degree() const;
  bool ends_at_last_variable() const { return blocks_.back().variable == n_; }
  bool starts_at_first_variable() const { return blocks_.front().variable == 1; }
  /// u with its first block removed; empty when r = 1.
  std::optional<PrincipalInput> without_first_block() const;

 private:
  DSequence d_;
  std::size_t n_;
  std::vector<Block> blocks_;
  std::vector<std::vector<std::int64_t>> digits_;
};

}  // namespace dfx
