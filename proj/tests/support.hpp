#pragma once

#include <random>
#include <string>
#include <vector>

#include "dfixed/ideal.hpp"
#include "dfixed/text_format.hpp"

namespace testing_support {

inline dfx::Monomial mono(const std::string& text, std::size_t n) { return dfx::parse_monomial(text, n); }

inline dfx::MonomialIdeal ideal(std::size_t n, const std::vector<std::string>& gens) {
  std::vector<dfx::Monomial> ms;
  for (const auto& g : gens) ms.push_back(dfx::parse_monomial(g, n));
  return dfx::MonomialIdeal::minimalize(n, ms);
}

/// Membership by brute force over the stored generator list.
inline bool divides_some(const std::vector<dfx::Monomial>& gens, const dfx::Monomial& w) {
  for (const auto& g : gens) {
    bool ok = true;
    for (std::size_t i = 0; i < w.n(); ++i) ok = ok && g[i] <= w[i];
    if (ok) return true;
  }
  return false;
}

inline dfx::Monomial random_monomial(std::mt19937_64& rng, std::size_t n, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<std::int32_t> exps(n);
  for (auto& x : exps) x = e(rng);
  return dfx::Monomial(exps);
}

inline dfx::MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t n, int count, int max_exp) {
  std::vector<dfx::Monomial> gens;
  for (int k = 0; k < count; ++k) gens.push_back(random_monomial(rng, n, max_exp));
  return dfx::MonomialIdeal::minimalize(n, gens);
}

}  // namespace testing_support
