#include "dfixed/ideal.hpp"

#include <algorithm>

namespace dfx {

namespace {

void require_same_n(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.n() != b.n())
    throw DomainError("ambient size mismatch: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
}

}  // namespace

MonomialIdeal MonomialIdeal::minimalize(std::size_t n, std::vector<Monomial> monomials) {
  for (const Monomial& m : monomials)
    if (m.n() != n) throw DomainError("mixed ambient sizes in generator set");
  std::sort(monomials.begin(), monomials.end(), canonical_less);
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  // A divisor has degree at most that of its multiple, so every possible
  // divisor of a candidate is already accepted when the candidate is seen.
  std::vector<Monomial> kept;
  for (Monomial& candidate : monomials) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& g) { return g.divides(candidate); });
    if (!dominated) kept.push_back(std::move(candidate));
  }
  return MonomialIdeal(n, std::move(kept));
}

bool MonomialIdeal::contains(const Monomial& w) const {
  if (w.n() != n_) throw DomainError("ambient size mismatch in membership test");
  for (const Monomial& g : gens_) {
    if (g.degree() > w.degree()) break;
    if (g.divides(w)) return true;
  }
  return false;
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_n(a, b);
  std::vector<Monomial> products;
  products.reserve(a.size() * b.size());
  for (const Monomial& f : a.gens())
    for (const Monomial& g : b.gens()) products.push_back(f * g);
  return MonomialIdeal::minimalize(a.n(), std::move(products));
}

MonomialIdeal power(const MonomialIdeal& ideal, std::int64_t k) {
  if (k < 0) throw DomainError("negative ideal power");
  MonomialIdeal result = MonomialIdeal::unit(ideal.n());
  for (std::int64_t i = 0; i < k; ++i) result = multiply(result, ideal);
  return result;
}

MonomialIdeal principal(const Monomial& m) { return MonomialIdeal::minimalize(m.n(), {m}); }

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_n(a, b);
  std::vector<Monomial> all(a.gens());
  all.insert(all.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal::minimalize(a.n(), std::move(all));
}

MonomialIdeal prefix_frobenius(std::size_t q, std::int64_t d, std::size_t n) {
  if (q < 1 || q > n) throw DomainError("prefix length must satisfy 1 <= q <= n");
  if (d < 1) throw DomainError("bracket exponent must be >= 1");
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < q; ++i) gens.push_back(Monomial::power(n, i, d));
  return MonomialIdeal::minimalize(n, std::move(gens));
}

MonomialIdeal maximal_ideal(std::size_t n) { return prefix_frobenius(n, 1, n); }

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& by) {
  if (by.n() != ideal.n()) throw DomainError("ambient size mismatch in colon");
  std::vector<Monomial> quotients;
  quotients.reserve(ideal.size());
  for (const Monomial& g : ideal.gens()) quotients.push_back(g.divide(gcd(g, by)));
  return MonomialIdeal::minimalize(ideal.n(), std::move(quotients));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  require_same_n(ideal, by);
  if (by.is_zero()) throw DomainError("colon by the zero ideal");
  MonomialIdeal result = colon(ideal, by.gens().front());
  for (std::size_t k = 1; k < by.size(); ++k) result = intersect(result, colon(ideal, by.gens()[k]));
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_n(a, b);
  std::vector<Monomial> lcms;
  lcms.reserve(a.size() * b.size());
  for (const Monomial& f : a.gens())
    for (const Monomial& g : b.gens()) lcms.push_back(lcm(f, g));
  return MonomialIdeal::minimalize(a.n(), std::move(lcms));
}

MonomialIdeal saturate_iterated(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  require_same_n(ideal, by);
  if (by.is_zero()) throw DomainError("saturation by the zero ideal");
  MonomialIdeal current = ideal;
  while (true) {
    MonomialIdeal next = colon(current, by);
    if (next == current) return current;
    current = std::move(next);
  }
}

MonomialIdeal saturate(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  require_same_n(ideal, by);
  if (by.is_zero()) throw DomainError("saturation by the zero ideal");
  if (by.size() != 1) return saturate_iterated(ideal, by);
  const Monomial& f = by.gens().front();
  std::vector<Monomial> stripped;
  stripped.reserve(ideal.size());
  for (const Monomial& g : ideal.gens()) {
    std::vector<std::int32_t> exps(g.exponents());
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (f[i] > 0) exps[i] = 0;
    stripped.emplace_back(std::move(exps));
  }
  return MonomialIdeal::minimalize(ideal.n(), std::move(stripped));
}

MonomialIdeal saturate_variable(const MonomialIdeal& ideal, std::size_t var) {
  return saturate(ideal, principal(Monomial::power(ideal.n(), var, 1)));
}

MonomialIdeal truncate(const MonomialIdeal& ideal, std::int64_t e) {
  require_in_range(e, "truncation degree");
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.gens()) {
    if (g.degree() >= e) {
      gens.push_back(g);
      continue;
    }
    for_each_monomial(ideal.n(), e - g.degree(), [&](const Monomial& y) { gens.push_back(g * y); });
  }
  return MonomialIdeal::minimalize(ideal.n(), std::move(gens));
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal, std::int64_t deg) {
  std::vector<Monomial> out;
  for_each_monomial(ideal.n(), deg, [&](const Monomial& w) {
    if (!ideal.contains(w)) out.push_back(w);
  });
  return out;
}

std::int64_t hilbert_function(const MonomialIdeal& ideal, std::int64_t deg) {
  std::int64_t count = 0;
  for_each_monomial(ideal.n(), deg, [&](const Monomial& w) {
    if (!ideal.contains(w)) ++count;
  });
  return count;
}

std::int64_t ideal_degree(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw DomainError("degree of the zero ideal is undefined");
  return ideal.gens().back().degree();
}

bool is_subideal(const MonomialIdeal& inner, const MonomialIdeal& outer) {
  require_same_n(inner, outer);
  return std::all_of(inner.gens().begin(), inner.gens().end(),
                     [&](const Monomial& g) { return outer.contains(g); });
}

MonomialIdeal restrict_to_prefix(const MonomialIdeal& ideal, std::size_t k) {
  if (k > ideal.n()) throw DomainError("prefix longer than ambient size");
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.gens()) {
    for (std::size_t i = k; i < g.n(); ++i)
      if (g[i] > 0) throw DomainError("generator uses a variable past x" + std::to_string(k));
    gens.emplace_back(std::vector<std::int32_t>(g.exponents().begin(), g.exponents().begin() + k));
  }
  return MonomialIdeal::minimalize(k, std::move(gens));
}

MonomialIdeal extend(const MonomialIdeal& ideal, std::size_t m) {
  if (m < ideal.n()) throw DomainError("cannot extend to fewer variables");
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.gens()) {
    std::vector<std::int32_t> exps(g.exponents());
    exps.resize(m, 0);
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal::minimalize(m, std::move(gens));
}

std::vector<std::int32_t> lcm_exponents(const MonomialIdeal& ideal) {
  std::vector<std::int32_t> top(ideal.n(), 0);
  for (const Monomial& g : ideal.gens())
    for (std::size_t i = 0; i < top.size(); ++i) top[i] = std::max(top[i], g[i]);
  return top;
}

std::optional<std::size_t> top_variable(const MonomialIdeal& ideal) {
  std::optional<std::size_t> top;
  for (const Monomial& g : ideal.gens()) {
    auto v = g.top_variable();
    if (v && (!top || *v > *top)) top = v;
  }
  return top;
}

}  // namespace dfx
