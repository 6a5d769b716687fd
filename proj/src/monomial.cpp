#include "dfixed/monomial.hpp"

#include <algorithm>

namespace dfx {

Monomial::Monomial(std::vector<std::int32_t> exponents) : exponents_(std::move(exponents)) {
  std::int64_t total = 0;
  for (std::int32_t e : exponents_) {
    if (e < 0) throw DomainError("negative exponent");
    total = checked_add(total, e);
  }
  degree_ = total;
}

Monomial Monomial::power(std::size_t n, std::size_t var, std::int64_t e) {
  if (var >= n) throw DomainError("variable index x" + std::to_string(var + 1) + " exceeds n=" + std::to_string(n));
  require_in_range(e, "exponent");
  std::vector<std::int32_t> exps(n, 0);
  exps[var] = static_cast<std::int32_t>(e);
  return Monomial(std::move(exps));
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

std::optional<std::size_t> Monomial::top_variable() const {
  for (std::size_t i = exponents_.size(); i-- > 0;)
    if (exponents_[i] > 0) return i;
  return std::nullopt;
}

Monomial Monomial::divide(const Monomial& other) const {
  if (other.n() != n()) throw DomainError("ambient size mismatch");
  std::vector<std::int32_t> exps(exponents_);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    exps[i] -= other.exponents_[i];
    if (exps[i] < 0) throw DomainError("monomial division: divisor does not divide");
  }
  return Monomial(std::move(exps));
}

Monomial Monomial::with_exponent(std::size_t var, std::int64_t e) const {
  require_in_range(e, "exponent");
  std::vector<std::int32_t> exps(exponents_);
  exps.at(var) = static_cast<std::int32_t>(e);
  return Monomial(std::move(exps));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.n() != b.n()) throw DomainError("ambient size mismatch");
  std::vector<std::int32_t> exps(a.n());
  for (std::size_t i = 0; i < exps.size(); ++i)
    exps[i] = static_cast<std::int32_t>(checked_add(a[i], b[i]));
  return Monomial(std::move(exps));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.n() != b.n()) throw DomainError("ambient size mismatch");
  std::vector<std::int32_t> exps(a.n());
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = std::max(a[i], b[i]);
  return Monomial(std::move(exps));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  if (a.n() != b.n()) throw DomainError("ambient size mismatch");
  std::vector<std::int32_t> exps(a.n());
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = std::min(a[i], b[i]);
  return Monomial(std::move(exps));
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.exponents() > b.exponents();
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (std::int32_t e : m.exponents()) h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ull;
  return h;
}

void for_each_monomial(std::size_t n, std::int64_t deg, const std::function<void(const Monomial&)>& visit) {
  require_in_range(deg, "degree");
  if (n == 0) {
    if (deg == 0) visit(Monomial(std::vector<std::int32_t>{}));
    return;
  }
  std::vector<std::int32_t> exps(n, 0);
  std::function<void(std::size_t, std::int64_t)> fill = [&](std::size_t i, std::int64_t rest) {
    if (i + 1 == n) {
      exps[i] = static_cast<std::int32_t>(rest);
      visit(Monomial(exps));
      return;
    }
    for (std::int64_t e = rest; e >= 0; --e) {
      exps[i] = static_cast<std::int32_t>(e);
      fill(i + 1, rest - e);
    }
  };
  fill(0, deg);
}

std::vector<Monomial> monomials_of_degree(std::size_t n, std::int64_t deg) {
  std::vector<Monomial> out;
  for_each_monomial(n, deg, [&](const Monomial& m) { out.push_back(m); });
  return out;
}

std::int64_t binomial(std::int64_t top, std::int64_t bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  bottom = std::min(bottom, top - bottom);
  wide_int result = 1;
  for (std::int64_t k = 1; k <= bottom; ++k) {
    result = result * (top - bottom + k) / k;
    if (result > static_cast<wide_int>(INT64_MAX)) throw DomainError("binomial overflow");
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t count_monomials(std::size_t n, std::int64_t deg) {
  if (n == 0) return deg == 0 ? 1 : 0;
  return binomial(deg + static_cast<std::int64_t>(n) - 1, static_cast<std::int64_t>(n) - 1);
}

}  // namespace dfx
