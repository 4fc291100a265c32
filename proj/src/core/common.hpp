#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rainbow {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// A caller-supplied argument violates an operation's precondition.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The request exceeds a size guard.  Guarded operations accept an explicit
/// override for callers who accept the cost.
struct CapabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Filesystem failure; the message names the offending path.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline long long binom2(long long x) { return x >= 2 ? x * (x - 1) / 2 : 0; }

inline BigInt big_factorial(long long n) {
  BigInt f = 1;
  for (long long i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt big_pow(const BigInt& base, unsigned long long exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1ULL) result *= b;
    b *= b;
    exp >>= 1ULL;
  }
  return result;
}

}  // namespace rainbow
