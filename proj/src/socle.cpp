#include "dfixed/socle.hpp"

#include <algorithm>
#include <map>

#include "dfixed/dfixed.hpp"

namespace dfx {

namespace {

void require_socle_shape(const PrincipalInput& input) {
  if (input.n() < 2) throw DomainError("socle formulas need n >= 2");
  if (!input.ends_at_last_variable()) throw DomainError("socle formulas need i_r = n");
  if (input.starts_at_first_variable())
    throw DomainError("socle formulas need i_1 >= 2; factor out the x1 power first");
}

MonomialIdeal bracket_power(const PrincipalInput& input, std::size_t q, std::size_t t, std::int64_t k) {
  if (k <= 0) return MonomialIdeal::unit(input.n());
  return power(prefix_frobenius(input.variable(q), input.d()[t], input.n()), k);
}

std::vector<SocleDimension> count_outside(const MonomialIdeal& j_ideal, const MonomialIdeal& ideal,
                                          std::int64_t hi) {
  std::vector<SocleDimension> out;
  for (std::int64_t e = 0; e <= hi; ++e) {
    std::int64_t count = 0;
    for_each_monomial(ideal.n(), e, [&](const Monomial& w) {
      if (j_ideal.contains(w) && !ideal.contains(w)) ++count;
    });
    if (count) out.push_back({e, count});
  }
  return out;
}

}  // namespace

std::string IndexPair::to_string() const {
  auto list = [](const std::vector<std::size_t>& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
  };
  return "(" + list(lambda) + "," + list(t) + ")";
}

bool operator<(const IndexPair& x, const IndexPair& y) {
  if (x.a() != y.a()) return x.a() < y.a();
  if (x.lambda != y.lambda) return x.lambda < y.lambda;
  return x.t < y.t;
}

SocleReport socle_ideal_single(const PrincipalInput& input) {
  require_socle_shape(input);
  if (input.r() != 1) throw DomainError("single-block socle needs r = 1");
  const std::size_t n = input.n();
  const auto nn = static_cast<std::int64_t>(n);
  const DSequence& d = input.d();
  MonomialIdeal all_vars = principal(Monomial(std::vector<std::int32_t>(n, 1)));
  SocleReport report;
  std::map<std::int64_t, std::int64_t> dims;
  for (std::size_t t = 0; t <= input.s(); ++t) {
    std::int64_t alpha_t = input.digit(1, t);
    if (alpha_t == 0) continue;
    MonomialIdeal component = power(all_vars, d[t] - 1);
    component = multiply(component, bracket_power(input, 1, t, alpha_t - 1));
    std::int64_t h = binomial(nn + alpha_t - 2, nn - 1);
    for (std::size_t j = t + 1; j <= input.s(); ++j) {
      component = multiply(component, bracket_power(input, 1, j, input.digit(1, j)));
      h = checked_mul(h, binomial(nn + input.digit(1, j) - 1, nn - 1));
    }
    std::int64_t e = input.tail_weight(1, t) + (nn - 1) * (d[t] - 1) - 1;
    dims[e] += h;
    report.components.push_back({IndexPair{{1}, {t}}, std::move(component), e, false});
  }
  for (auto [e, h] : dims) report.degrees.push_back({e, h});
  std::size_t s = input.top_digit(1);
  report.max_degree = input.digit(1, s) * d[s] + (nn - 1) * (d[s] - 1) - 1;
  return report;
}

std::vector<IndexPair> enumerate_pairs(const PrincipalInput& input) {
  const std::size_t r = input.r();
  std::vector<IndexPair> pairs;
  IndexPair current;
  // Build lambda and t together from the first component upward; the last
  // block index must be r.
  auto extend = [&](auto&& self, std::size_t min_block, std::size_t min_digit) -> void {
    for (std::size_t q = min_block; q <= r; ++q)
      for (std::size_t t = min_digit; t <= input.s(); ++t) {
        if (input.digit(q, t) == 0) continue;
        current.lambda.push_back(q);
        current.t.push_back(t);
        if (q == r)
          pairs.push_back(current);
        else
          self(self, q + 1, t + 1);
        current.lambda.pop_back();
        current.t.pop_back();
      }
  };
  extend(extend, 1, 0);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

MonomialIdeal socle_component(const PrincipalInput& input, const IndexPair& pair) {
  const std::size_t a = pair.a();
  const std::size_t n = input.n();
  const DSequence& d = input.d();
  auto block_var = [&](std::size_t q) { return q == 0 ? std::size_t{0} : input.variable(q); };
  auto lam = [&](std::size_t nu) { return nu == 0 ? std::size_t{0} : pair.lambda[nu - 1]; };

  std::vector<std::int32_t> lead(n, 0);
  for (std::size_t e = 1; e <= a; ++e)
    for (std::size_t v = block_var(lam(e - 1)) + 1; v <= block_var(lam(e)); ++v)
      lead[v - 1] = static_cast<std::int32_t>(checked_add(lead[v - 1], d[pair.t[e - 1]] - 1));
  MonomialIdeal result = principal(Monomial(std::move(lead)));

  for (std::size_t nu = 1; nu <= a; ++nu) {
    std::size_t block = lam(nu);
    std::size_t t_nu = pair.t[nu - 1];
    if (nu < a) result = multiply(result, prefix_frobenius(input.variable(block), d[pair.t[nu]], n));
    for (std::size_t j = t_nu + 1; j <= input.s(); ++j)
      result = multiply(result, bracket_power(input, block, j, input.digit(block, j)));
    result = multiply(result, bracket_power(input, block, t_nu, input.digit(block, t_nu) - 1));
    for (std::size_t q = lam(nu - 1) + 1; q < block; ++q)
      for (std::size_t j = t_nu; j <= input.s(); ++j)
        result = multiply(result, bracket_power(input, q, j, input.digit(q, j)));
  }
  return result;
}

std::int64_t component_degree(const PrincipalInput& input, const IndexPair& pair) {
  const DSequence& d = input.d();
  auto lam = [&](std::size_t nu) { return nu == 0 ? std::size_t{0} : pair.lambda[nu - 1]; };
  auto block_var = [&](std::size_t q) { return q == 0 ? std::int64_t{0} : static_cast<std::int64_t>(input.variable(q)); };
  std::int64_t weight = 0;
  std::int64_t spread = 0;
  for (std::size_t nu = 1; nu <= pair.a(); ++nu) {
    std::size_t t_nu = pair.t[nu - 1];
    for (std::size_t q = lam(nu - 1) + 1; q <= lam(nu); ++q)
      for (std::size_t j = t_nu; j <= input.s(); ++j) weight += input.digit(q, j) * d[j];
    spread += (block_var(lam(nu)) - block_var(lam(nu - 1))) * (d[t_nu] - 1);
  }
  return weight + spread - d[pair.t[0]];
}

std::int64_t socle_max_degree(const PrincipalInput& input) {
  std::size_t r = input.r();
  std::size_t sr = input.top_digit(r);
  return input.tail_weight(r, sr) + (static_cast<std::int64_t>(input.n()) - 1) * (input.d()[sr] - 1) - 1;
}

SocleReport socle_ideal_general(const PrincipalInput& input) {
  require_socle_shape(input);
  MonomialIdeal ideal = principal_ideal(input);
  SocleReport report;
  MonomialIdeal j_total = MonomialIdeal::zero(input.n());
  for (const IndexPair& pair : enumerate_pairs(input)) {
    MonomialIdeal component = socle_component(input, pair);
    bool redundant = is_subideal(component, ideal);
    j_total = ideal_sum(j_total, component);
    report.components.push_back({pair, std::move(component), component_degree(input, pair), redundant});
  }
  report.max_degree = socle_max_degree(input);
  report.degrees = count_outside(j_total, ideal, report.max_degree + static_cast<std::int64_t>(input.n()));
  return report;
}

SocleReport socle_formula(const PrincipalInput& input) {
  return input.r() == 1 ? socle_ideal_single(input) : socle_ideal_general(input);
}

std::vector<SocleDegree> socle_direct(const MonomialIdeal& ideal, std::int64_t degree_lo, std::int64_t degree_hi) {
  if (degree_lo > degree_hi) throw DomainError("socle range needs degree_lo <= degree_hi");
  require_in_range(degree_lo, "degree");
  std::vector<SocleDegree> out;
  const std::size_t n = ideal.n();
  for (std::int64_t e = degree_lo; e <= degree_hi; ++e) {
    SocleDegree piece{e, 0, {}};
    for_each_monomial(n, e, [&](const Monomial& w) {
      if (ideal.contains(w)) return;
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int32_t> exps(w.exponents());
        exps[i] += 1;
        if (!ideal.contains(Monomial(std::move(exps)))) return;
      }
      piece.basis.push_back(w);
    });
    piece.dimension = static_cast<std::int64_t>(piece.basis.size());
    if (piece.dimension) out.push_back(std::move(piece));
  }
  return out;
}

bool socle_containment_check(const PrincipalInput& input) {
  if (!input.ends_at_last_variable()) throw DomainError("socle containment needs i_r = n");
  if (input.r() == 1) return true;
  MonomialIdeal ideal = principal_ideal(input);
  MonomialIdeal next = saturate_variable(ideal, input.n() - 1);
  return is_subideal(colon(ideal, maximal_ideal(input.n())), next);
}

}  // namespace dfx
