#pragma once

// d-sequences 1 = d_0 | d_1 | ... | d_s, mixed-radix digit expansions over
// them, and the digitwise partial order they induce on the naturals.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dfixed/errors.hpp"

namespace dfx {

struct DSequenceRejection;
class DSequence;
std::variant<DSequence, DSequenceRejection> validate(std::span<const std::int64_t> candidate);

/// A chain of positive integers starting at 1, strictly increasing, each
/// entry dividing the next.
class DSequence {
 public:
  /// Throws DomainError describing the first violated invariant.
  static DSequence from(std::span<const std::int64_t> entries);
  static DSequence from(std::initializer_list<std::int64_t> entries) {
    return from(std::span<const std::int64_t>(entries.begin(), entries.size()));
  }
  /// The p-adic chain 1 | p | ... | p^k.
  static DSequence powers(std::int64_t p, std::size_t k);

  std::size_t size() const { return entries_.size(); }
  /// Index s of the last entry.
  std::size_t top() const { return entries_.size() - 1; }
  std::int64_t operator[](std::size_t t) const { return entries_[t]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }

  friend bool operator==(const DSequence&, const DSequence&) = default;

 private:
  explicit DSequence(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}
  friend std::variant<DSequence, DSequenceRejection> validate(std::span<const std::int64_t>);

  std::vector<std::int64_t> entries_;
};

enum class DSequenceDefect { empty, out_of_range, first_not_one, not_increasing, not_divisible };

struct DSequenceRejection {
  DSequenceDefect defect;
  std::size_t index = 0;

  std::string message() const;
  friend bool operator==(const DSequenceRejection&, const DSequenceRejection&) = default;
};

/// Checks the three d-sequence invariants in index order and reports the
/// first violation.
std::variant<DSequence, DSequenceRejection> validate(std::span<const std::int64_t> candidate);

/// Strictly increasing positive integers starting at 1, divisibility not
/// required. Only used to exhibit non-unique expansions.
class LooseSequence {
 public:
  explicit LooseSequence(std::vector<std::int64_t> entries);

  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t t) const { return entries_[t]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }
  bool is_divisibility_chain() const;

 private:
  std::vector<std::int64_t> entries_;
};

/// Digits (a_0, ..., a_s) of an integer over a d-sequence:
/// a = sum a_t d_t with 0 <= a_t < d_{t+1}/d_t for t < s.
struct DDigits {
  DSequence base;
  std::vector<std::int64_t> digits;

  std::int64_t operator[](std::size_t t) const { return digits[t]; }
  /// True when every digit below the top satisfies its radix bound.
  bool in_bounds() const;
};

/// Greedy expansion: top digit is the quotient by d_s, then descend.
DDigits decompose(std::int64_t a, const DSequence& d);
std::int64_t compose(const DDigits& digits);

/// a <=_d b iff every digit of a is at most the matching digit of b.
bool leq_d(std::int64_t a, std::int64_t b, const DSequence& d);

/// All t with t <=_d b, ascending.
std::vector<std::int64_t> sub_values(std::int64_t b, const DSequence& d);

/// Writes a = a' + a'' with a' <=_d b' and a'' <=_d b''. Requires a <=_d b' + b''.
std::pair<std::int64_t, std::int64_t> split(std::int64_t a, std::int64_t b_prime, std::int64_t b_second,
                                            const DSequence& d);

/// Every digit vector with sum a_t d_t = a, a_t d_t < d_{t+1} for t < s and
/// unbounded top digit, in ascending lexicographic order.
std::vector<std::vector<std::int64_t>> all_representations(std::int64_t a, const LooseSequence& candidate);

/// Comma-separated decimal form, e.g. "1,2,4,12".
std::string to_string(const DSequence& d);
std::vector<std::int64_t> parse_integer_list(std::string_view text);
DSequence parse_dsequence(std::string_view text);

}  // namespace dfx
