#pragma once

// Text grammar for monomials ("x1^2*x2^9", unit "1") and generator files
// ("n=<int>" on the first non-comment line, then one monomial per line).

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dfixed/ideal.hpp"

namespace dfx {

/// (1-based variable, exponent) factors in order of appearance.
std::vector<std::pair<std::size_t, std::int64_t>> parse_factors(std::string_view text);
/// Largest variable index mentioned, 0 for the unit.
std::size_t max_variable_index(std::string_view text);
Monomial parse_monomial(std::string_view text, std::size_t n);
std::string format_monomial(const Monomial& m);

struct GeneratorFile {
  std::size_t n = 0;
  std::vector<Monomial> monomials;
};

GeneratorFile parse_generator_file(std::string_view content);
std::string format_generator_file(const MonomialIdeal& ideal);

/// "(x1^2, x1*x2)", "(0)" for the zero ideal.
std::string format_ideal(const MonomialIdeal& ideal);
std::vector<std::string> format_generators(const MonomialIdeal& ideal);

}  // namespace dfx
