#ifndef OCTIC_ENUMERATOR_HPP
#define OCTIC_ENUMERATOR_HPP

#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "octic/quad_int.hpp"
#include "octic/thue_setup.hpp"

namespace octic {

/// A solution of A⁴ − √m·B⁴ = ρ.
struct ThueSolution {
  QuadInt a;
  QuadInt b;
  QuadInt rho;

  friend bool operator==(const ThueSolution& x, const ThueSolution& y) {
    return x.a == y.a && x.b == y.b && x.rho == y.rho;
  }
  friend bool operator<(const ThueSolution& x, const ThueSolution& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.rho < y.rho;
  }
};

inline bool verify_solution(const ThueSolution& s, long m) {
  if (!condition_star(m) || m >= 0) return false;
  const QuadRing ring(m);
  return units_of(m).contains(s.rho) && thue_form(ring, s.a, s.b) == s.rho;
}

/// Every solution with B = a2 + b2·√m, |a2|, |b2| ≤ bound. The half box a2 ≥ 0 is
/// searched; B ↦ −B is added explicitly (A⁴ and B⁴ are invariant under sign).
inline std::vector<ThueSolution> enumerate_small(long m, long bound) {
  if (bound < 0) throw std::invalid_argument("enumerate_small: negative bound");
  const QuadRing ring(m);
  const UnitSet units = units_of(m);
  const QuadInt sm = ring.sqrt_m();
  std::set<ThueSolution> found;
  for (long a2 = 0; a2 <= bound; ++a2) {
    for (long b2 = -bound; b2 <= bound; ++b2) {
      const QuadInt b(a2, b2);
      const QuadInt smb4 = ring.mul(sm, ring.pow(b, 4));
      for (const QuadInt& rho : units) {
        for (const QuadInt& a : ring.fourth_roots(smb4 + rho)) {
          ThueSolution s{a, b, rho};
          if (!verify_solution(s, m)) throw std::logic_error("enumerate_small: unverified solution");
          found.insert({a, -b, rho});
          found.insert(std::move(s));
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace octic

#endif  // OCTIC_ENUMERATOR_HPP
