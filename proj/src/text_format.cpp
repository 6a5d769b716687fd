#include "dfixed/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace dfx {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_number(std::string_view s, std::string_view whole) {
  std::int64_t value = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size() || value < 0 || value > kMaxValue)
    throw DomainError("unparseable monomial '" + std::string(whole) + "'");
  return value;
}

}  // namespace

std::vector<std::pair<std::size_t, std::int64_t>> parse_factors(std::string_view text) {
  std::string_view body = trim(text);
  if (body.empty()) throw DomainError("empty monomial");
  std::vector<std::pair<std::size_t, std::int64_t>> factors;
  if (body == "1") return factors;
  std::size_t pos = 0;
  while (true) {
    std::size_t star = body.find('*', pos);
    std::string_view factor = trim(body.substr(pos, star == body.npos ? body.npos : star - pos));
    if (factor.size() < 2 || factor[0] != 'x') throw DomainError("unparseable monomial '" + std::string(text) + "'");
    std::size_t caret = factor.find('^');
    std::int64_t var = parse_number(factor.substr(1, caret == factor.npos ? factor.npos : caret - 1), text);
    std::int64_t exp = caret == factor.npos ? 1 : parse_number(factor.substr(caret + 1), text);
    if (var < 1) throw DomainError("variable indices start at x1 in '" + std::string(text) + "'");
    factors.emplace_back(static_cast<std::size_t>(var), exp);
    if (star == body.npos) break;
    pos = star + 1;
  }
  return factors;
}

std::size_t max_variable_index(std::string_view text) {
  std::size_t top = 0;
  for (auto [var, exp] : parse_factors(text)) top = std::max(top, var);
  return top;
}

Monomial parse_monomial(std::string_view text, std::size_t n) {
  std::vector<std::int32_t> exps(n, 0);
  for (auto [var, exp] : parse_factors(text)) {
    if (var > n)
      throw DomainError("variable x" + std::to_string(var) + " exceeds ambient n=" + std::to_string(n));
    exps[var - 1] = static_cast<std::int32_t>(checked_add(exps[var - 1], exp));
  }
  return Monomial(std::move(exps));
}

std::string format_monomial(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.n(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (m[i] != 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

GeneratorFile parse_generator_file(std::string_view content) {
  GeneratorFile file;
  bool have_n = false;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t eol = content.find('\n', pos);
    std::string_view line = trim(content.substr(pos, eol == content.npos ? content.npos : eol - pos));
    pos = eol == content.npos ? content.size() + 1 : eol + 1;
    if (line.empty() || line.front() == '#') continue;
    if (!have_n) {
      if (line.substr(0, 2) != "n=") throw DomainError("generator file must declare n=<int> first");
      std::int64_t n = parse_number(trim(line.substr(2)), line);
      if (n < 1) throw DomainError("ambient n must be >= 1");
      file.n = static_cast<std::size_t>(n);
      have_n = true;
      continue;
    }
    file.monomials.push_back(parse_monomial(line, file.n));
  }
  if (!have_n) throw DomainError("generator file must declare n=<int> first");
  return file;
}

std::string format_generator_file(const MonomialIdeal& ideal) {
  std::string out = "n=" + std::to_string(ideal.n()) + "\n";
  for (const Monomial& g : ideal.gens()) out += format_monomial(g) + "\n";
  return out;
}

std::vector<std::string> format_generators(const MonomialIdeal& ideal) {
  std::vector<std::string> out;
  for (const Monomial& g : ideal.gens()) out.push_back(format_monomial(g));
  return out;
}

std::string format_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t k = 0; k < ideal.size(); ++k) {
    if (k) out += ", ";
    out += format_monomial(ideal.gens()[k]);
  }
  return out + ")";
}

}  // namespace dfx
