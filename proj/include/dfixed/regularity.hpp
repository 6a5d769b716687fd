#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dfixed/ideal.hpp"
#include "dfixed/principal.hpp"

namespace dfx {

enum class RegularityMethod { formula, sequential, stability, betti };

std::string to_string(RegularityMethod method);
RegularityMethod parse_regularity_method(const std::string& name);

/// Candidate extremal Betti position in (homological index, j - i)
/// coordinates of S/I.
struct Corner {
  std::size_t position = 0;
  std::int64_t row = 0;
  std::int64_t betti = 0;
  /// Row predicted from the block data alone.
  std::int64_t predicted_row = 0;
  /// Not dominated by another candidate with larger position and row >= row.
  bool survives = true;

  friend bool operator==(const Corner&, const Corner&) = default;
};

struct RegularityReport {
  std::int64_t value = 0;
  RegularityMethod method = RegularityMethod::formula;
  /// D_q of the blocks after any x1 block is factored out.
  std::vector<std::int64_t> block_regularities;
  /// alpha_1 when u has an x1 block, else 0.
  std::int64_t x1_shift = 0;
  std::vector<Corner> corners;
  /// The stability route on inputs other than a single block x_n^alpha
  /// only bounds the regularity from above.
  bool upper_bound_only = false;
};

/// max_q D_q, plus alpha_1 when u = x1^alpha_1 * u'. Requires i_r = n.
RegularityReport reg_formula(const PrincipalInput& input);

/// n * deg(u).
std::int64_t reg_bound(const PrincipalInput& input);

/// One candidate per chain step. Rows and values come from the top degree of
/// J_l^sat / J_l; predicted rows are D_q - 1 (shifted by alpha_1 when an x1
/// block is present, with alpha_1 - 1 for the x1 step itself).
std::vector<Corner> corners(const PrincipalInput& input);

/// Top degree and its dimension for a finite-length quotient J^sat / J.
/// Returns {-1, 0} when the quotient is zero.
struct QuotientTop {
  std::int64_t degree = -1;
  std::int64_t dimension = 0;
};
QuotientTop top_of_quotient(const MonomialIdeal& saturated, const MonomialIdeal& ideal);

/// 1 + max over chain steps of the top degree of J_l^sat / J_l. Throws for
/// ideals that are not of Borel type.
RegularityReport reg_sequential(const MonomialIdeal& ideal);

/// Least e with I_{>=e} stable, flagged as an upper bound.
RegularityReport reg_stability(const MonomialIdeal& ideal);
/// Same search on <u>_d; exact when u = x_n^alpha.
RegularityReport reg_stability(const PrincipalInput& input);

}  // namespace dfx
