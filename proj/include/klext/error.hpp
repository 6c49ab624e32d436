#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace klext {

/// Malformed input or an element outside the structure it was asked about.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A theorem hypothesis (KL-goodness of the root of unity) is not known to hold.
class GatingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Broken internal invariant or arithmetic overflow.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InternalError("integer overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw InternalError("integer overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InternalError("integer overflow in multiplication");
  return r;
}

}  // namespace checked
}  // namespace klext
