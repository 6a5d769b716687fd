#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dfixed/errors.hpp"

namespace dfx {

/// Exponent vector over n variables. Variables are 0-based here; the text
/// format and reports use 1-based names x1..xn.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::int32_t> exponents);
  Monomial(std::initializer_list<std::int32_t> exponents)
      : Monomial(std::vector<std::int32_t>(exponents)) {}

  static Monomial unit(std::size_t n) { return Monomial(std::vector<std::int32_t>(n, 0)); }
  /// x_var^e in n variables, var 0-based.
  static Monomial power(std::size_t n, std::size_t var, std::int64_t e);

  std::size_t n() const { return exponents_.size(); }
  std::int32_t operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<std::int32_t>& exponents() const { return exponents_; }
  std::int64_t degree() const { return degree_; }
  bool is_unit() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  /// Largest index with positive exponent (0-based); empty for the unit.
  std::optional<std::size_t> top_variable() const;

  /// this / other; other must divide this.
  Monomial divide(const Monomial& other) const;
  Monomial with_exponent(std::size_t var, std::int64_t e) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents_ == b.exponents_; }

 private:
  std::vector<std::int32_t> exponents_;
  std::int64_t degree_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// Degree ascending, then lexicographically descending on exponent vectors
/// (x1^2 before x1*x2 before x2^2).
bool canonical_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

/// Visits every degree-deg monomial in n variables in canonical order.
void for_each_monomial(std::size_t n, std::int64_t deg, const std::function<void(const Monomial&)>& visit);
std::vector<Monomial> monomials_of_degree(std::size_t n, std::int64_t deg);
/// C(deg + n - 1, n - 1) as a 64-bit count.
std::int64_t count_monomials(std::size_t n, std::int64_t deg);

std::int64_t binomial(std::int64_t top, std::int64_t bottom);

}  // namespace dfx
