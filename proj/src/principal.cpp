#include "dfixed/principal.hpp"

namespace dfx {

PrincipalInput::PrincipalInput(DSequence d, std::size_t n, std::vector<Block> blocks)
    : d_(std::move(d)), n_(n), blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw DomainError("principal input needs at least one block (u != 1)");
  for (std::size_t q = 0; q < blocks_.size(); ++q) {
    const Block& b = blocks_[q];
    if (b.variable < 1 || b.variable > n_)
      throw DomainError("block variable x" + std::to_string(b.variable) + " outside 1..n=" + std::to_string(n_));
    if (q > 0 && b.variable <= blocks_[q - 1].variable)
      throw DomainError("block variables must be strictly increasing");
    if (b.exponent < 1) throw DomainError("block exponents must be positive");
    require_in_range(b.exponent, "block exponent");
    digits_.push_back(decompose(b.exponent, d_).digits);
  }
  degree();
}

PrincipalInput PrincipalInput::from_monomial(const Monomial& u, const DSequence& d) {
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < u.n(); ++i)
    if (u[i] > 0) blocks.push_back(Block{i + 1, u[i]});
  return PrincipalInput(d, u.n(), std::move(blocks));
}

std::size_t PrincipalInput::top_digit(std::size_t q) const {
  const auto& row = digits_.at(q - 1);
  for (std::size_t t = row.size(); t-- > 0;)
    if (row[t] != 0) return t;
  throw DomainError("block exponent has no nonzero digit");
}

std::int64_t PrincipalInput::tail_weight(std::size_t q, std::size_t t) const {
  std::int64_t total = 0;
  for (std::size_t e = 1; e <= q; ++e)
    for (std::size_t j = t; j <= s(); ++j) total = checked_add(total, checked_mul(digit(e, j), d_[j]));
  return total;
}

std::int64_t PrincipalInput::block_regularity(std::size_t q) const {
  std::size_t sq = top_digit(q);
  return checked_add(tail_weight(q, sq),
                     checked_mul(static_cast<std::int64_t>(variable(q)) - 1, d_[sq] - 1));
}

Monomial PrincipalInput::monomial() const {
  std::vector<std::int32_t> exps(n_, 0);
  for (const Block& b : blocks_) exps[b.variable - 1] = static_cast<std::int32_t>(b.exponent);
  return Monomial(std::move(exps));
}

std::int64_t PrincipalInput::degree() const {
  std::int64_t total = 0;
  for (const Block& b : blocks_) total = checked_add(total, b.exponent);
  return total;
}

std::optional<PrincipalInput> PrincipalInput::without_first_block() const {
  if (blocks_.size() < 2) return std::nullopt;
  return PrincipalInput(d_, n_, std::vector<Block>(blocks_.begin() + 1, blocks_.end()));
}

}  // namespace dfx
