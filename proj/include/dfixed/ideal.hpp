#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dfixed/monomial.hpp"

namespace dfx {

/// Monomial ideal in k[x1..xn], stored as its minimal generators in
/// canonical order. The zero ideal has no generators, the unit ideal has
/// the single generator 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n, {}); }
  static MonomialIdeal unit(std::size_t n) { return MonomialIdeal(n, {Monomial::unit(n)}); }
  /// Drops every monomial divisible by another and sorts canonically.
  static MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> monomials);

  std::size_t n() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }

  bool contains(const Monomial& w) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  MonomialIdeal(std::size_t n, std::vector<Monomial> gens) : n_(n), gens_(std::move(gens)) {}

  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

inline bool member(const MonomialIdeal& ideal, const Monomial& w) { return ideal.contains(w); }

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& ideal, std::int64_t k);
MonomialIdeal principal(const Monomial& m);
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);

/// (x_1^d, ..., x_q^d) in n variables, q 1-based.
MonomialIdeal prefix_frobenius(std::size_t q, std::int64_t d, std::size_t n);
/// (x_1, ..., x_n).
MonomialIdeal maximal_ideal(std::size_t n);

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by);
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& by);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// I : J^inf. For principal J = (f) the exponents of every variable in
/// supp(f) are removed from the generators; otherwise colon is iterated.
MonomialIdeal saturate(const MonomialIdeal& ideal, const MonomialIdeal& by);
/// Always iterates K <- K : J until it stops changing.
MonomialIdeal saturate_iterated(const MonomialIdeal& ideal, const MonomialIdeal& by);
/// I : x_var^inf, var 0-based.
MonomialIdeal saturate_variable(const MonomialIdeal& ideal, std::size_t var);

/// I_{>=e}.
MonomialIdeal truncate(const MonomialIdeal& ideal, std::int64_t e);

/// Degree-deg monomials outside I in canonical order.
std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal, std::int64_t deg);
std::int64_t hilbert_function(const MonomialIdeal& ideal, std::int64_t deg);

/// Largest generator degree. Throws for the zero ideal.
std::int64_t ideal_degree(const MonomialIdeal& ideal);

/// True when every generator of inner lies in outer.
bool is_subideal(const MonomialIdeal& inner, const MonomialIdeal& outer);

/// Same generators read in k[x1..xk]; requires that no generator uses a
/// variable past x_k.
MonomialIdeal restrict_to_prefix(const MonomialIdeal& ideal, std::size_t k);
/// Generators of I inside k[x1..xm] for m >= n.
MonomialIdeal extend(const MonomialIdeal& ideal, std::size_t m);

/// Per-variable maximum exponent over the generators (the exponents of the lcm).
std::vector<std::int32_t> lcm_exponents(const MonomialIdeal& ideal);
/// 0-based index of the largest variable appearing in any generator.
std::optional<std::size_t> top_variable(const MonomialIdeal& ideal);

}  // namespace dfx
