#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dfixed/ideal.hpp"
#include "dfixed/principal.hpp"

namespace dfx {

/// (lambda, t): block indices 1 <= lambda_1 < ... < lambda_a = r and digit
/// positions t_1 < ... < t_a with alpha_{lambda_nu, t_nu} != 0.
struct IndexPair {
  std::vector<std::size_t> lambda;
  std::vector<std::size_t> t;

  std::size_t a() const { return lambda.size(); }
  /// "((1,2),(0,2))".
  std::string to_string() const;

  friend bool operator==(const IndexPair&, const IndexPair&) = default;
  /// Orders by a, then lambda, then t.
  friend bool operator<(const IndexPair& x, const IndexPair& y);
};

struct SocleComponent {
  IndexPair key;
  MonomialIdeal ideal;
  std::int64_t predicted_degree = 0;
  /// Every generator already lies in I, so the component adds nothing.
  bool redundant = false;
};

struct SocleDimension {
  std::int64_t degree = 0;
  std::int64_t dimension = 0;

  friend bool operator==(const SocleDimension&, const SocleDimension&) = default;
};

struct SocleReport {
  std::vector<SocleComponent> components;
  /// Nonzero degrees only, ascending.
  std::vector<SocleDimension> degrees;
  std::int64_t max_degree = 0;
};

/// Single block u = x_n^alpha. Dimensions come from the closed binomial
/// products, summed when two digit positions share a degree.
SocleReport socle_ideal_single(const PrincipalInput& input);

std::vector<IndexPair> enumerate_pairs(const PrincipalInput& input);

/// J_(lambda,t) for a pair of the input.
MonomialIdeal socle_component(const PrincipalInput& input, const IndexPair& pair);
/// d_(lambda,t) + sum_nu (i_{lambda_nu} - i_{lambda_{nu-1}})(d_{t_nu} - 1) - d_{t_1}.
std::int64_t component_degree(const PrincipalInput& input, const IndexPair& pair);
/// d_{r s_r} + (n-1)(d_{s_r} - 1) - 1.
std::int64_t socle_max_degree(const PrincipalInput& input);

/// Requires 2 <= i_1 and i_r = n. Dimensions count monomials of J outside I
/// in each degree of [0, max_degree + n].
SocleReport socle_ideal_general(const PrincipalInput& input);

/// socle_ideal_single for r = 1, otherwise socle_ideal_general.
SocleReport socle_formula(const PrincipalInput& input);

struct SocleDegree {
  std::int64_t degree = 0;
  std::int64_t dimension = 0;
  std::vector<Monomial> basis;
};

/// Monomials w outside I with x_i * w in I for every i, per degree in
/// [degree_lo, degree_hi]. Only degrees with a nonzero socle are listed.
std::vector<SocleDegree> socle_direct(const MonomialIdeal& ideal, std::int64_t degree_lo, std::int64_t degree_hi);

/// (I : m) is contained in I : x_n^inf.
bool socle_containment_check(const PrincipalInput& input);

}  // namespace dfx
