#ifndef OCTIC_CONJUGATES_HPP
#define OCTIC_CONJUGATES_HPP

#include <array>
#include <stdexcept>

#include "octic/condition.hpp"
#include "octic/mp_real.hpp"

namespace octic {

/// The four roots of x^4 = √m under √m ↦ i·√|m|:
/// α^(j) = |m|^(1/8)·exp(i(π/8 + (j−1)π/2)), j = 1..4 (array index j−1).
inline std::array<ComplexBall, 4> relative_conjugates(long m, mpfr_prec_t prec) {
  if (!condition_star(m) || m >= 0) throw std::invalid_argument("relative_conjugates: m must satisfy (*) and be negative");
  const mpfr_prec_t wp = prec + 16;
  Real r(wp);
  mpfr_rootn_ui(r.get(), Real(-m, wp).get(), 8, MPFR_RNDN);
  // cos(π/8) = √(2+√2)/2, sin(π/8) = √(2−√2)/2
  Real s2(wp);
  mpfr_sqrt_ui(s2.get(), 2, MPFR_RNDN);
  Real two(2L, wp);
  Real c = sqrt(two + s2);
  Real s = sqrt(two - s2);
  mpfr_div_2ui(c.get(), c.get(), 1, MPFR_RNDN);
  mpfr_div_2ui(s.get(), s.get(), 1, MPFR_RNDN);
  Real x(prec), y(prec);
  mpfr_mul(x.get(), r.get(), c.get(), MPFR_RNDN);
  mpfr_mul(y.get(), r.get(), s.get(), MPFR_RNDN);
  ComplexBall base(x, y, Radius());
  base.rad = base.l1_magnitude() * Radius::pow2(3 - static_cast<long>(prec));
  std::array<ComplexBall, 4> out{base, base, base, base};
  // multiplication by i^(j−1) is exact
  out[1] = ComplexBall(-y, x, base.rad);
  out[2] = ComplexBall(-x, -y, base.rad);
  out[3] = ComplexBall(y, -x, base.rad);
  return out;
}

}  // namespace octic

#endif  // OCTIC_CONJUGATES_HPP
