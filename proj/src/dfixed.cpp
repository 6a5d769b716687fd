#include "dfixed/dfixed.hpp"

#include <algorithm>
#include <unordered_set>

namespace dfx {

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal, const char* op) {
  if (ideal.is_zero()) throw DomainError(std::string(op) + " needs a nonzero ideal");
  if (ideal.is_unit()) throw DomainError(std::string(op) + " needs a proper ideal");
}

// Every exchange of u that is not already in the ideal.
template <typename Visit>
void for_each_exchange(const Monomial& u, const DSequence& d, Visit&& visit) {
  for (std::size_t i = 1; i < u.n(); ++i) {
    if (u[i] == 0) continue;
    for (std::int64_t t : sub_values(u[i], d)) {
      if (t == 0) continue;
      for (std::size_t j = 0; j < i; ++j) {
        std::vector<std::int32_t> exps(u.exponents());
        exps[i] -= static_cast<std::int32_t>(t);
        exps[j] = static_cast<std::int32_t>(checked_add(exps[j], t));
        if (!visit(Monomial(std::move(exps)))) return;
      }
    }
  }
}

}  // namespace

MonomialIdeal partial_product(const PrincipalInput& input, std::size_t e) {
  if (e > input.r()) throw DomainError("partial product past the last block");
  MonomialIdeal result = MonomialIdeal::unit(input.n());
  for (std::size_t q = 1; q <= e; ++q)
    for (std::size_t t = 0; t <= input.s(); ++t) {
      std::int64_t alpha = input.digit(q, t);
      if (alpha == 0) continue;
      MonomialIdeal bracket = prefix_frobenius(input.variable(q), input.d()[t], input.n());
      for (std::int64_t k = 0; k < alpha; ++k) result = multiply(result, bracket);
    }
  return result;
}

MonomialIdeal principal_ideal(const PrincipalInput& input) { return partial_product(input, input.r()); }

MonomialIdeal closure(std::span<const Monomial> gens, const DSequence& d) {
  if (gens.empty()) throw DomainError("closure needs at least one generator");
  std::size_t n = gens.front().n();
  MonomialIdeal current = MonomialIdeal::minimalize(n, std::vector<Monomial>(gens.begin(), gens.end()));
  std::vector<Monomial> pending = current.gens();
  while (!pending.empty()) {
    std::unordered_set<Monomial, MonomialHash> fresh;
    for (const Monomial& u : pending)
      for_each_exchange(u, d, [&](Monomial w) {
        if (!current.contains(w)) fresh.insert(std::move(w));
        return true;
      });
    if (fresh.empty()) break;
    std::vector<Monomial> all(current.gens());
    all.insert(all.end(), fresh.begin(), fresh.end());
    MonomialIdeal next = MonomialIdeal::minimalize(n, std::move(all));
    pending.clear();
    for (const Monomial& g : next.gens())
      if (fresh.count(g)) pending.push_back(g);
    current = std::move(next);
  }
  return current;
}

bool is_dfixed(const MonomialIdeal& ideal, const DSequence& d) {
  bool ok = true;
  for (const Monomial& g : ideal.gens()) {
    for_each_exchange(g, d, [&](const Monomial& w) { return ok = ideal.contains(w); });
    if (!ok) return false;
  }
  return true;
}

bool is_stable(const MonomialIdeal& ideal) {
  for (const Monomial& g : ideal.gens()) {
    auto m = g.top_variable();
    if (!m) continue;
    for (std::size_t i = 0; i < *m; ++i) {
      std::vector<std::int32_t> exps(g.exponents());
      exps[*m] -= 1;
      exps[i] += 1;
      if (!ideal.contains(Monomial(std::move(exps)))) return false;
    }
  }
  return true;
}

bool is_borel_type(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw DomainError("Borel type check needs a nonzero ideal");
  for (std::size_t j = 1; j <= ideal.n(); ++j) {
    MonomialIdeal by_variable = saturate_variable(ideal, j - 1);
    MonomialIdeal by_prefix = saturate(ideal, prefix_frobenius(j, 1, ideal.n()));
    if (by_variable != by_prefix) return false;
  }
  return true;
}

SequentialChain sequential_chain(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "sequential chain");
  SequentialChain chain;
  chain.ideals.push_back(ideal);
  while (!chain.ideals.back().is_unit()) {
    const MonomialIdeal& current = chain.ideals.back();
    std::size_t pivot = *top_variable(current) + 1;
    MonomialIdeal restricted = restrict_to_prefix(current, pivot);
    MonomialIdeal saturated = saturate(restricted, maximal_ideal(pivot));
    MonomialIdeal next = saturate_variable(current, pivot - 1);
    chain.pivots.push_back(pivot);
    chain.restricted.push_back(std::move(restricted));
    chain.restricted_saturated.push_back(std::move(saturated));
    chain.ideals.push_back(std::move(next));
  }
  return chain;
}

std::int64_t min_stable_truncation(const MonomialIdeal& ideal, std::optional<std::int64_t> cap) {
  require_proper_nonzero(ideal, "stable truncation search");
  std::int64_t start = ideal_degree(ideal);
  std::int64_t limit = cap.value_or(0);
  if (!cap) {
    auto top = lcm_exponents(ideal);
    std::int64_t lcm_degree = 0;
    for (auto e : top) lcm_degree = checked_add(lcm_degree, e);
    limit = std::max(checked_mul(static_cast<std::int64_t>(ideal.n()), start), lcm_degree);
  }
  for (std::int64_t e = start; e <= limit; ++e)
    if (is_stable(truncate(ideal, e))) return e;
  throw DomainError("no stable truncation found for degrees " + std::to_string(start) + ".." + std::to_string(limit));
}

}  // namespace dfx
