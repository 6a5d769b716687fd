#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dfixed/ideal.hpp"
#include "dfixed/principal.hpp"

namespace dfx {

/// prod_{q <= e} prod_t (m_q^[d_t])^{alpha_qt}. With e = r this is <u>_d.
MonomialIdeal partial_product(const PrincipalInput& input, std::size_t e);
MonomialIdeal principal_ideal(const PrincipalInput& input);

/// Smallest d-fixed ideal containing gens, by repeated exchanges
/// u -> u * x_j^t / x_i^t (j < i, 0 < t <=_d nu_i(u)).
MonomialIdeal closure(std::span<const Monomial> gens, const DSequence& d);

/// Checks the exchanges on minimal generators only. For a multiple w = g*y
/// and t <=_d nu_i(w), split t into t' <=_d nu_i(g) and t'' <=_d nu_i(y);
/// then w * x_j^t / x_i^t is a multiple of g * x_j^t' / x_i^t'.
bool is_dfixed(const MonomialIdeal& ideal, const DSequence& d);

/// x_i * g / x_{m(g)} in I for every generator g and i < m(g).
bool is_stable(const MonomialIdeal& ideal);

/// I : x_j^inf = I : (x_1..x_j)^inf for all j.
bool is_borel_type(const MonomialIdeal& ideal);

struct SequentialChain {
  /// I_0 = I, ..., the last entry is the unit ideal.
  std::vector<MonomialIdeal> ideals;
  /// n_l, 1-based.
  std::vector<std::size_t> pivots;
  /// J_l: I_l read in k[x1..x_{n_l}].
  std::vector<MonomialIdeal> restricted;
  /// J_l : (x1..x_{n_l})^inf.
  std::vector<MonomialIdeal> restricted_saturated;

  std::size_t length() const { return pivots.size(); }
};

SequentialChain sequential_chain(const MonomialIdeal& ideal);

/// Least e >= deg(I) with I_{>=e} stable, searched up to cap. Throws
/// DomainError when no such e <= cap exists. The default cap is the larger
/// of n*deg(I) and the degree of the lcm of the generators.
std::int64_t min_stable_truncation(const MonomialIdeal& ideal, std::optional<std::int64_t> cap = std::nullopt);

}  // namespace dfx
