#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dfx {

__extension__ typedef __int128 wide_int;

/// Largest integer accepted for sequence entries, exponents, digits and degrees.
inline constexpr std::int64_t kMaxValue = 2147483647;

/// Raised when an input violates a mathematical precondition of an operation.
/// The message names the violated precondition.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_in_range(std::int64_t value, const char* what) {
  if (value < 0 || value > kMaxValue)
    throw DomainError(std::string(what) + " out of range [0, 2^31-1]: " + std::to_string(value));
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t sum = a + b;
  if (sum > kMaxValue) throw DomainError("integer overflow: " + std::to_string(a) + " + " + std::to_string(b));
  return sum;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t product = 0;
  if (__builtin_mul_overflow(a, b, &product) || product > kMaxValue)
    throw DomainError("integer overflow: " + std::to_string(a) + " * " + std::to_string(b));
  return product;
}

}  // namespace dfx
