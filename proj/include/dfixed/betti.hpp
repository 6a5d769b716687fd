#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dfixed/ideal.hpp"
#include "dfixed/linalg.hpp"

namespace dfx {

/// Basis of ((S/I)_{j-i}) tensor Lambda^i: monomial-major, subsets in colex
/// order. Subsets are bitmasks over the 0-based variables.
struct KoszulBasis {
  std::vector<Monomial> monomials;
  std::vector<std::uint32_t> subsets;

  std::size_t size() const { return monomials.size() * subsets.size(); }
};

/// i-subsets of {0..n-1} as bitmasks in colex order.
std::vector<std::uint32_t> colex_subsets(std::size_t n, std::size_t i);
KoszulBasis koszul_basis(const MonomialIdeal& ideal, std::size_t i, std::int64_t j);

/// Matrix of the Koszul differential from degree j of (S/I) tensor Lambda^i
/// to degree j of (S/I) tensor Lambda^{i-1}. Rows index the source basis,
/// columns the target basis. Deleting the k-th element (1-based) of a subset
/// carries sign (-1)^{k+1}; images in I are dropped.
DenseMatrix koszul_boundary(const MonomialIdeal& ideal, std::size_t i, std::int64_t j);

enum class BettiStrategy { multigraded, whole_degree };

struct BettiOptions {
  std::int64_t characteristic = 1000003;
  /// Defaults to the degree of the lcm of the generators, past which every
  /// Betti number of S/I vanishes.
  std::optional<std::int64_t> max_degree;
  /// Known upper bound on reg(I); certifies a table cut below the lcm degree.
  std::optional<std::int64_t> regularity_bound;
  BettiStrategy strategy = BettiStrategy::multigraded;
  /// Called with (done, total) work units; used for progress reporting.
  std::function<void(std::size_t, std::size_t)> progress;
};

struct BettiTable {
  std::size_t n = 0;
  std::int64_t characteristic = 0;
  std::int64_t max_degree = 0;
  /// max_degree reaches the lcm degree.
  bool complete = false;
  std::optional<std::int64_t> regularity_bound;
  /// (i, j) -> beta_{i,j}(S/I), nonzero entries only.
  std::map<std::pair<std::size_t, std::int64_t>, std::int64_t> entries;

  std::int64_t at(std::size_t i, std::int64_t j) const;
  /// Every nonzero entry inside the regularity window has j <= max_degree.
  bool certified() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

BettiTable betti_table(const MonomialIdeal& ideal, const BettiOptions& options = {});

struct BettiRegularity {
  /// max { j - i : beta_{i,j}(S/I) != 0, i >= 1 }.
  std::int64_t quotient = 0;
  /// reg(I) = quotient + 1.
  std::int64_t ideal = 0;
};

BettiRegularity reg_from_betti(const BettiTable& table);

struct ExtremalEntry {
  std::size_t i = 0;
  std::int64_t row = 0;
  std::int64_t betti = 0;

  friend bool operator==(const ExtremalEntry&, const ExtremalEntry&) = default;
};

/// Nonzero entries with no other nonzero entry weakly above-right in
/// (i, j - i) coordinates.
std::vector<ExtremalEntry> extremal_from_betti(const BettiTable& table);

/// Macaulay-style table: rows j - i, columns i, "." for zeros.
std::string format_betti_table(const BettiTable& table);

/// dim of ((S/I) tensor Lambda^i)_j.
std::int64_t koszul_piece_dimension(const MonomialIdeal& ideal, std::size_t i, std::int64_t j);

}  // namespace dfx
