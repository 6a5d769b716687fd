#include "dfixed/betti.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <sstream>
#include <unordered_map>

namespace dfx {

std::vector<std::uint32_t> colex_subsets(std::size_t n, std::size_t i) {
  if (n > 31) throw DomainError("Koszul complex limited to 31 variables");
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    if (static_cast<std::size_t>(std::popcount(mask)) == i) out.push_back(mask);
  return out;
}

KoszulBasis koszul_basis(const MonomialIdeal& ideal, std::size_t i, std::int64_t j) {
  KoszulBasis basis;
  if (i > ideal.n()) return basis;
  std::int64_t deg = j - static_cast<std::int64_t>(i);
  if (deg < 0) return basis;
  basis.monomials = standard_monomials(ideal, deg);
  basis.subsets = colex_subsets(ideal.n(), i);
  return basis;
}

namespace {

void require_index(const MonomialIdeal& ideal, std::size_t i, std::int64_t j) {
  if (i > ideal.n()) throw DomainError("homological index must satisfy 0 <= i <= n");
  if (j < 0) throw DomainError("internal degree must be >= 0");
}

// Sign of removing variable k from subset mask: (-1)^(elements below k).
int removal_sign(std::uint32_t mask, std::size_t k) {
  return std::popcount(mask & ((1u << k) - 1)) % 2 == 0 ? 1 : -1;
}

std::int64_t lcm_degree(const MonomialIdeal& ideal) {
  std::int64_t total = 0;
  for (auto e : lcm_exponents(ideal)) total = checked_add(total, e);
  return total;
}

void add_entry(BettiTable& table, std::size_t i, std::int64_t j, std::int64_t value) {
  if (value < 0) throw DomainError("negative homology dimension; rank computation is inconsistent");
  if (value > 0) table.entries[{i, j}] += value;
}

void multigraded(const MonomialIdeal& ideal, const BettiOptions& options, BettiTable& table) {
  const std::size_t n = ideal.n();
  const auto box = lcm_exponents(ideal);
  std::size_t total = 1;
  for (auto e : box) total *= static_cast<std::size_t>(e) + 1;
  std::vector<std::vector<std::uint32_t>> subsets(n + 1);
  for (std::size_t i = 0; i <= n; ++i) subsets[i] = colex_subsets(n, i);

  std::vector<std::int32_t> b(n, 0);
  std::size_t done = 0;
  while (true) {
    std::int64_t degree = 0;
    for (auto e : b) degree += e;
    if (degree <= table.max_degree) {
      // Basis in multidegree b: subsets F with b - 1_F >= 0 and x^(b - 1_F) outside I.
      std::vector<std::vector<std::uint32_t>> basis(n + 1);
      for (std::size_t i = 0; i <= n; ++i)
        for (std::uint32_t mask : subsets[i]) {
          std::vector<std::int32_t> exps(b);
          bool ok = true;
          for (std::size_t k = 0; k < n && ok; ++k)
            if (mask >> k & 1u) ok = --exps[k] >= 0;
          if (ok && !ideal.contains(Monomial(std::move(exps)))) basis[i].push_back(mask);
        }
      std::vector<std::size_t> ranks(n + 2, 0);
      for (std::size_t i = 1; i <= n; ++i) {
        const auto& src = basis[i];
        const auto& tgt = basis[i - 1];
        if (src.empty() || tgt.empty()) continue;
        DenseMatrix m(src.size(), tgt.size());
        for (std::size_t r = 0; r < src.size(); ++r)
          for (std::size_t k = 0; k < n; ++k) {
            if (!(src[r] >> k & 1u)) continue;
            auto it = std::lower_bound(tgt.begin(), tgt.end(), src[r] & ~(1u << k));
            if (it != tgt.end() && *it == (src[r] & ~(1u << k)))
              m.at(r, static_cast<std::size_t>(it - tgt.begin())) = removal_sign(src[r], k);
          }
        ranks[i] = rank(m, table.characteristic);
      }
      for (std::size_t i = 0; i <= n; ++i)
        add_entry(table, i, degree,
                  static_cast<std::int64_t>(basis[i].size()) - static_cast<std::int64_t>(ranks[i] + ranks[i + 1]));
    }
    ++done;
    if (options.progress && done % 4096 == 0) options.progress(done, total);
    std::size_t k = 0;
    while (k < n && ++b[k] > box[k]) b[k++] = 0;
    if (k == n) break;
  }
  if (options.progress) options.progress(total, total);
}

void whole_degree(const MonomialIdeal& ideal, const BettiOptions& options, BettiTable& table) {
  const std::size_t n = ideal.n();
  for (std::int64_t j = 0; j <= table.max_degree; ++j) {
    std::vector<std::size_t> ranks(n + 2, 0);
    for (std::size_t i = 1; i <= n; ++i) ranks[i] = rank(koszul_boundary(ideal, i, j), table.characteristic);
    for (std::size_t i = 0; i <= n; ++i)
      add_entry(table, i, j,
                koszul_piece_dimension(ideal, i, j) - static_cast<std::int64_t>(ranks[i] + ranks[i + 1]));
    if (options.progress) options.progress(static_cast<std::size_t>(j + 1), static_cast<std::size_t>(table.max_degree + 1));
  }
}

}  // namespace

DenseMatrix koszul_boundary(const MonomialIdeal& ideal, std::size_t i, std::int64_t j) {
  require_index(ideal, i, j);
  KoszulBasis source = koszul_basis(ideal, i, j);
  if (i == 0) return DenseMatrix(source.size(), 0);
  KoszulBasis target = koszul_basis(ideal, i - 1, j);
  DenseMatrix m(source.size(), target.size());
  if (source.size() == 0 || target.size() == 0) return m;
  std::unordered_map<Monomial, std::size_t, MonomialHash> monomial_index;
  for (std::size_t k = 0; k < target.monomials.size(); ++k) monomial_index.emplace(target.monomials[k], k);
  std::unordered_map<std::uint32_t, std::size_t> subset_index;
  for (std::size_t k = 0; k < target.subsets.size(); ++k) subset_index.emplace(target.subsets[k], k);
  const std::size_t n = ideal.n();
  for (std::size_t mi = 0; mi < source.monomials.size(); ++mi)
    for (std::size_t si = 0; si < source.subsets.size(); ++si) {
      std::uint32_t mask = source.subsets[si];
      std::size_t row = mi * source.subsets.size() + si;
      for (std::size_t k = 0; k < n; ++k) {
        if (!(mask >> k & 1u)) continue;
        std::vector<std::int32_t> exps(source.monomials[mi].exponents());
        exps[k] += 1;
        auto hit = monomial_index.find(Monomial(std::move(exps)));
        if (hit == monomial_index.end()) continue;
        std::size_t col = hit->second * target.subsets.size() + subset_index.at(mask & ~(1u << k));
        m.at(row, col) = removal_sign(mask, k);
      }
    }
  return m;
}

std::int64_t koszul_piece_dimension(const MonomialIdeal& ideal, std::size_t i, std::int64_t j) {
  require_index(ideal, i, j);
  std::int64_t deg = j - static_cast<std::int64_t>(i);
  if (deg < 0) return 0;
  return checked_mul(hilbert_function(ideal, deg),
                     binomial(static_cast<std::int64_t>(ideal.n()), static_cast<std::int64_t>(i)));
}

std::int64_t BettiTable::at(std::size_t i, std::int64_t j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

bool BettiTable::certified() const {
  if (complete) return true;
  return regularity_bound && max_degree >= *regularity_bound - 1 + static_cast<std::int64_t>(n);
}

BettiTable betti_table(const MonomialIdeal& ideal, const BettiOptions& options) {
  require_field(options.characteristic);
  if (ideal.n() == 0) throw DomainError("Betti table needs n >= 1");
  BettiTable table;
  table.n = ideal.n();
  table.characteristic = options.characteristic;
  const std::int64_t full = lcm_degree(ideal);
  table.max_degree = options.max_degree.value_or(full);
  require_in_range(table.max_degree, "max_degree");
  if (!ideal.is_zero() && table.max_degree < ideal_degree(ideal))
    throw DomainError("max_degree " + std::to_string(table.max_degree) + " is below the generator degree " +
                      std::to_string(ideal_degree(ideal)));
  table.complete = !ideal.is_zero() && table.max_degree >= full;
  table.regularity_bound = options.regularity_bound;
  if (ideal.is_zero()) {
    table.entries[{0, 0}] = 1;
    table.complete = true;
    return table;
  }
  if (options.strategy == BettiStrategy::multigraded)
    multigraded(ideal, options, table);
  else
    whole_degree(ideal, options, table);
  return table;
}

BettiRegularity reg_from_betti(const BettiTable& table) {
  if (!table.certified())
    throw DomainError("Betti table truncated at degree " + std::to_string(table.max_degree) +
                      " is not certified for the regularity window");
  std::optional<std::int64_t> best;
  for (const auto& [key, value] : table.entries) {
    if (key.first == 0 || value == 0) continue;
    std::int64_t row = key.second - static_cast<std::int64_t>(key.first);
    if (!best || row > *best) best = row;
  }
  if (!best) throw DomainError("regularity undefined: no Betti numbers in positive homological degree");
  return {*best, *best + 1};
}

std::vector<ExtremalEntry> extremal_from_betti(const BettiTable& table) {
  std::vector<ExtremalEntry> out;
  for (const auto& [key, value] : table.entries) {
    if (value == 0) continue;
    std::size_t i = key.first;
    std::int64_t row = key.second - static_cast<std::int64_t>(i);
    bool dominated = std::any_of(table.entries.begin(), table.entries.end(), [&](const auto& other) {
      std::size_t i2 = other.first.first;
      std::int64_t row2 = other.first.second - static_cast<std::int64_t>(i2);
      return other.second != 0 && i2 >= i && row2 >= row && (i2 != i || row2 != row);
    });
    if (!dominated) out.push_back({i, row, value});
  }
  std::sort(out.begin(), out.end(), [](const ExtremalEntry& a, const ExtremalEntry& b) { return a.i < b.i; });
  return out;
}

std::string format_betti_table(const BettiTable& table) {
  std::int64_t top_row = 0;
  for (const auto& [key, value] : table.entries)
    top_row = std::max(top_row, key.second - static_cast<std::int64_t>(key.first));
  std::vector<std::int64_t> totals(table.n + 1, 0);
  for (const auto& [key, value] : table.entries) totals[key.first] += value;
  std::size_t width = 1;
  for (const auto& [key, value] : table.entries) width = std::max(width, std::to_string(value).size());
  for (auto t : totals) width = std::max(width, std::to_string(t).size());
  std::size_t label = std::max<std::size_t>(6, std::to_string(top_row).size() + 1);

  std::ostringstream out;
  out << std::setw(static_cast<int>(label)) << "" << ' ';
  for (std::size_t i = 0; i <= table.n; ++i) out << ' ' << std::setw(static_cast<int>(width)) << i;
  out << '\n' << std::setw(static_cast<int>(label)) << "total:" << ' ';
  for (auto t : totals) out << ' ' << std::setw(static_cast<int>(width)) << t;
  out << '\n';
  for (std::int64_t row = 0; row <= top_row; ++row) {
    out << std::setw(static_cast<int>(label)) << (std::to_string(row) + ":") << ' ';
    for (std::size_t i = 0; i <= table.n; ++i) {
      std::int64_t v = table.at(i, row + static_cast<std::int64_t>(i));
      out << ' ' << std::setw(static_cast<int>(width)) << (v ? std::to_string(v) : ".");
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace dfx
