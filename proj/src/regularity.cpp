#include "dfixed/regularity.hpp"

#include <algorithm>

#include "dfixed/dfixed.hpp"

namespace dfx {

std::string to_string(RegularityMethod method) {
  switch (method) {
    case RegularityMethod::formula: return "formula";
    case RegularityMethod::sequential: return "sequential";
    case RegularityMethod::stability: return "stability";
    case RegularityMethod::betti: return "betti";
  }
  return "formula";
}

RegularityMethod parse_regularity_method(const std::string& name) {
  for (auto m : {RegularityMethod::formula, RegularityMethod::sequential, RegularityMethod::stability,
                 RegularityMethod::betti})
    if (to_string(m) == name) return m;
  throw DomainError("unknown regularity method '" + name + "'");
}

RegularityReport reg_formula(const PrincipalInput& input) {
  if (!input.ends_at_last_variable()) throw DomainError("regularity formula needs i_r = n");
  RegularityReport report;
  report.method = RegularityMethod::formula;
  const PrincipalInput* core = &input;
  std::optional<PrincipalInput> rest;
  if (input.starts_at_first_variable()) {
    report.x1_shift = input.exponent(1);
    rest = input.without_first_block();
    if (!rest) {
      report.value = report.x1_shift;
      return report;
    }
    core = &*rest;
  }
  std::int64_t best = 0;
  for (std::size_t q = 1; q <= core->r(); ++q) {
    report.block_regularities.push_back(core->block_regularity(q));
    best = std::max(best, report.block_regularities.back());
  }
  report.value = checked_add(report.x1_shift, best);
  return report;
}

std::int64_t reg_bound(const PrincipalInput& input) {
  return checked_mul(static_cast<std::int64_t>(input.n()), input.degree());
}

QuotientTop top_of_quotient(const MonomialIdeal& saturated, const MonomialIdeal& ideal) {
  const std::size_t n = ideal.n();
  if (saturated.n() != n) throw DomainError("ambient size mismatch");
  // Membership depends on w_i only up to the largest x_i exponent among the
  // generators. A monomial of J^sat \ J at or past both caps in some x_i
  // would give an infinite x_i-ray in a finite-length module, so the
  // quotient lives in the box w_i < max of the two caps.
  auto cap_j = lcm_exponents(ideal);
  auto cap_s = lcm_exponents(saturated);
  std::vector<std::int32_t> box(n);
  for (std::size_t i = 0; i < n; ++i) box[i] = std::max(cap_j[i], cap_s[i]);
  QuotientTop top;
  std::vector<std::int32_t> w(n, 0);
  if (n == 0) return top;
  while (true) {
    Monomial m(w);
    if (saturated.contains(m) && !ideal.contains(m)) {
      if (m.degree() > top.degree) top = {m.degree(), 1};
      else if (m.degree() == top.degree) ++top.dimension;
    }
    std::size_t k = 0;
    while (k < n && ++w[k] >= box[k]) w[k++] = 0;
    if (k == n) break;
  }
  return top;
}

namespace {

struct ChainTops {
  std::vector<std::size_t> pivots;
  std::vector<QuotientTop> tops;
};

ChainTops chain_tops(const MonomialIdeal& ideal) {
  SequentialChain chain = sequential_chain(ideal);
  ChainTops out;
  out.pivots = chain.pivots;
  for (std::size_t l = 0; l < chain.length(); ++l)
    out.tops.push_back(top_of_quotient(chain.restricted_saturated[l], chain.restricted[l]));
  return out;
}

}  // namespace

std::vector<Corner> corners(const PrincipalInput& input) {
  RegularityReport formula = reg_formula(input);
  ChainTops chain = chain_tops(principal_ideal(input));
  const std::size_t offset = formula.x1_shift > 0 ? 1 : 0;
  std::vector<Corner> out;
  for (std::size_t l = 0; l < chain.pivots.size(); ++l) {
    Corner c;
    c.position = chain.pivots[l];
    c.row = chain.tops[l].degree;
    c.betti = chain.tops[l].dimension;
    // Step l saturates block r - l.
    std::size_t q = input.r() - l;
    if (offset && q == 1)
      c.predicted_row = formula.x1_shift - 1;
    else
      c.predicted_row = formula.block_regularities.at(q - 1 - offset) - 1 + formula.x1_shift;
    out.push_back(c);
  }
  for (Corner& c : out)
    c.survives = c.betti > 0 && std::none_of(out.begin(), out.end(), [&](const Corner& other) {
                   return other.betti > 0 && other.position > c.position && other.row >= c.row;
                 });
  return out;
}

RegularityReport reg_sequential(const MonomialIdeal& ideal) {
  if (!is_borel_type(ideal)) throw DomainError("sequential regularity needs an ideal of Borel type");
  ChainTops chain = chain_tops(ideal);
  RegularityReport report;
  report.method = RegularityMethod::sequential;
  std::int64_t best = -1;
  for (const QuotientTop& top : chain.tops) best = std::max(best, top.degree);
  report.value = best + 1;
  return report;
}

RegularityReport reg_stability(const MonomialIdeal& ideal) {
  RegularityReport report;
  report.method = RegularityMethod::stability;
  report.value = min_stable_truncation(ideal);
  report.upper_bound_only = true;
  return report;
}

RegularityReport reg_stability(const PrincipalInput& input) {
  RegularityReport report = reg_stability(principal_ideal(input));
  report.upper_bound_only = !(input.r() == 1 && input.ends_at_last_variable());
  return report;
}

}  // namespace dfx
