#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace slpedit {

/// Edit-distance values are exact integers in units of 1/scale.
using Cost = std::int64_t;

/// Marker for "no path". Never produced by finite arithmetic below.
inline constexpr Cost kUnreachable = std::numeric_limits<Cost>::max();

inline bool is_finite(Cost c) { return c != kUnreachable; }

/// Base class of every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (files, parameters, symbols).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A numeric or size guard tripped: overflow, expansion limit, table storage.
class GuardError : public Error {
 public:
  using Error::Error;
};

inline Cost checked_add(Cost a, Cost b) {
  Cost r;
  if (__builtin_add_overflow(a, b, &r) || r == kUnreachable)
    throw GuardError("cost overflow in addition");
  return r;
}

inline Cost checked_mul(Cost a, Cost b) {
  Cost r;
  if (__builtin_mul_overflow(a, b, &r) || r == kUnreachable)
    throw GuardError("cost overflow in multiplication");
  return r;
}

/// Addition where either side may be kUnreachable.
inline Cost add_or_unreachable(Cost a, Cost b) {
  if (a == kUnreachable || b == kUnreachable) return kUnreachable;
  return checked_add(a, b);
}

}  // namespace slpedit
