#ifndef OCTIC_CONDITION_HPP
#define OCTIC_CONDITION_HPP

#include <cstdint>

namespace octic {

/// Square-freeness of |m| by trial division. 0 is not square-free.
inline bool is_squarefree(long m) {
  std::uint64_t n = m < 0 ? static_cast<std::uint64_t>(-(m + 1)) + 1 : static_cast<std::uint64_t>(m);
  if (n == 0) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

/// m is square-free, m ∉ {0, 1} and m ≢ 1 (mod 4). Under this condition m^(1/8)
/// generates a power integral basis of Q(m^(1/8)).
inline bool condition_star(long m) {
  if (m == 0 || m == 1) return false;
  long r = m % 4;
  if (r < 0) r += 4;
  if (r == 1) return false;
  return is_squarefree(m);
}

}  // namespace octic

#endif  // OCTIC_CONDITION_HPP
