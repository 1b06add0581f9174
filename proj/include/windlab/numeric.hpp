#pragma once

#include <limits>
#include <stdexcept>

namespace windlab {

/// Floor division (rounds toward negative infinity).
inline long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Mathematical residue in [0, b); requires b > 0.
inline long long floor_mod(long long a, long long b) {
  long long r = a % b;
  if (r < 0) r += b;
  return r;
}

inline long long mul_checked(long long a, long long b) {
  __int128 p = static_cast<__int128>(a) * b;
  if (p > std::numeric_limits<long long>::max() || p < std::numeric_limits<long long>::min())
    throw std::overflow_error("integer overflow in multiplication");
  return static_cast<long long>(p);
}

inline long long add_checked(long long a, long long b) {
  __int128 s = static_cast<__int128>(a) + b;
  if (s > std::numeric_limits<long long>::max() || s < std::numeric_limits<long long>::min())
    throw std::overflow_error("integer overflow in addition");
  return static_cast<long long>(s);
}

inline bool is_power_of(long long n, long long p) {
  if (n < 1 || p < 2) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace windlab
