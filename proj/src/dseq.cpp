#include "dfixed/dseq.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

namespace dfx {

std::string DSequenceRejection::message() const {
  std::string where = " at index " + std::to_string(index);
  switch (defect) {
    case DSequenceDefect::empty: return "d-sequence is empty";
    case DSequenceDefect::out_of_range: return "d-sequence entry out of range [1, 2^31-1]" + where;
    case DSequenceDefect::first_not_one: return "d-sequence must start with 1";
    case DSequenceDefect::not_increasing: return "d-sequence not strictly increasing" + where;
    case DSequenceDefect::not_divisible: return "d-sequence entry not divisible by its predecessor" + where;
  }
  return "invalid d-sequence";
}

std::variant<DSequence, DSequenceRejection> validate(std::span<const std::int64_t> candidate) {
  if (candidate.empty()) return DSequenceRejection{DSequenceDefect::empty, 0};
  for (std::size_t t = 0; t < candidate.size(); ++t) {
    std::int64_t v = candidate[t];
    if (v < 1 || v > kMaxValue) return DSequenceRejection{DSequenceDefect::out_of_range, t};
    if (t == 0) {
      if (v != 1) return DSequenceRejection{DSequenceDefect::first_not_one, 0};
      continue;
    }
    if (v <= candidate[t - 1]) return DSequenceRejection{DSequenceDefect::not_increasing, t};
    if (v % candidate[t - 1] != 0) return DSequenceRejection{DSequenceDefect::not_divisible, t};
  }
  return DSequence(std::vector<std::int64_t>(candidate.begin(), candidate.end()));
}

DSequence DSequence::from(std::span<const std::int64_t> entries) {
  auto result = validate(entries);
  if (auto* rejection = std::get_if<DSequenceRejection>(&result)) throw DomainError(rejection->message());
  return std::get<DSequence>(std::move(result));
}

DSequence DSequence::powers(std::int64_t p, std::size_t k) {
  if (p < 2) throw DomainError("p-adic chain needs p >= 2");
  std::vector<std::int64_t> entries{1};
  for (std::size_t i = 0; i < k; ++i) entries.push_back(checked_mul(entries.back(), p));
  return from(entries);
}

LooseSequence::LooseSequence(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_[0] != 1) throw DomainError("loose sequence must start with 1");
  for (std::size_t t = 1; t < entries_.size(); ++t) {
    require_in_range(entries_[t], "loose sequence entry");
    if (entries_[t] <= entries_[t - 1]) throw DomainError("loose sequence not strictly increasing");
  }
}

bool LooseSequence::is_divisibility_chain() const {
  for (std::size_t t = 1; t < entries_.size(); ++t)
    if (entries_[t] % entries_[t - 1] != 0) return false;
  return true;
}

bool DDigits::in_bounds() const {
  if (digits.size() != base.size()) return false;
  for (std::size_t t = 0; t < digits.size(); ++t) {
    if (digits[t] < 0) return false;
    if (t < base.top() && digits[t] >= base[t + 1] / base[t]) return false;
  }
  return true;
}

DDigits decompose(std::int64_t a, const DSequence& d) {
  require_in_range(a, "integer");
  std::vector<std::int64_t> digits(d.size(), 0);
  std::int64_t rest = a;
  for (std::size_t t = d.size(); t-- > 0;) {
    digits[t] = rest / d[t];
    rest %= d[t];
  }
  return DDigits{d, std::move(digits)};
}

std::int64_t compose(const DDigits& digits) {
  if (digits.digits.size() != digits.base.size()) throw DomainError("digit count does not match d-sequence length");
  std::int64_t total = 0;
  for (std::size_t t = 0; t < digits.digits.size(); ++t)
    total = checked_add(total, checked_mul(digits.digits[t], digits.base[t]));
  return total;
}

bool leq_d(std::int64_t a, std::int64_t b, const DSequence& d) {
  DDigits da = decompose(a, d);
  DDigits db = decompose(b, d);
  for (std::size_t t = 0; t < d.size(); ++t)
    if (da[t] > db[t]) return false;
  return true;
}

std::vector<std::int64_t> sub_values(std::int64_t b, const DSequence& d) {
  DDigits db = decompose(b, d);
  std::vector<std::int64_t> values{0};
  for (std::size_t t = 0; t < d.size(); ++t) {
    std::vector<std::int64_t> next;
    next.reserve(values.size() * static_cast<std::size_t>(db[t] + 1));
    for (std::int64_t v : values)
      for (std::int64_t k = 0; k <= db[t]; ++k) next.push_back(v + k * d[t]);
    values = std::move(next);
  }
  std::sort(values.begin(), values.end());
  return values;
}

std::pair<std::int64_t, std::int64_t> split(std::int64_t a, std::int64_t b_prime, std::int64_t b_second,
                                            const DSequence& d) {
  std::int64_t b = checked_add(b_prime, b_second);
  if (!leq_d(a, b, d))
    throw DomainError("split requires a <=_d b' + b'': " + std::to_string(a) + " is not <=_d " + std::to_string(b));
  auto candidates = sub_values(b_prime, d);
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    std::int64_t rest = a - *it;
    if (rest >= 0 && leq_d(rest, b_second, d)) return {*it, rest};
  }
  throw DomainError("split failed for a=" + std::to_string(a));
}

std::vector<std::vector<std::int64_t>> all_representations(std::int64_t a, const LooseSequence& candidate) {
  require_in_range(a, "integer");
  const std::size_t len = candidate.size();
  std::vector<std::vector<std::int64_t>> found;
  std::vector<std::int64_t> digits(len, 0);
  // Lexicographic order follows from assigning a_0 first in ascending order.
  std::function<void(std::size_t, std::int64_t)> place = [&](std::size_t t, std::int64_t rest) {
    if (t + 1 == len) {
      if (rest % candidate[t] == 0) {
        digits[t] = rest / candidate[t];
        found.push_back(digits);
      }
      return;
    }
    for (std::int64_t k = 0; k * candidate[t] < candidate[t + 1] && k * candidate[t] <= rest; ++k) {
      digits[t] = k;
      place(t + 1, rest - k * candidate[t]);
    }
    digits[t] = 0;
  };
  place(0, a);
  return found;
}

std::string to_string(const DSequence& d) {
  std::string out;
  for (std::size_t t = 0; t < d.size(); ++t) {
    if (t) out += ',';
    out += std::to_string(d[t]);
  }
  return out;
}

std::vector<std::int64_t> parse_integer_list(std::string_view text) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size())
      throw DomainError("not an integer list: '" + std::string(text) + "'");
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return values;
}

DSequence parse_dsequence(std::string_view text) { return DSequence::from(parse_integer_list(text)); }

}  // namespace dfx
