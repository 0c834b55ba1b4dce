#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace pronorm {

// Exact unbounded integer used for all group orders and indices.
using Integer = boost::multiprecision::cpp_int;

inline bool is_odd(const Integer& n) { return (n & 1) != 0; }
inline bool is_even(const Integer& n) { return (n & 1) == 0; }

// Largest divisor of n coprime to 2.
inline Integer odd_part(Integer n) {
  while (n != 0 && is_even(n)) n >>= 1;
  return n;
}

// Largest power of p dividing n.
inline Integer p_part(Integer n, std::uint64_t p) {
  Integer part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

inline bool is_power_of(Integer n, std::uint64_t p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace pronorm
