#ifndef OCTIC_FIELD_SCAN_HPP
#define OCTIC_FIELD_SCAN_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "octic/condition.hpp"
#include "octic/poly.hpp"
#include "octic/quad_int.hpp"

namespace octic {

/// x^8 − m.
inline IntPoly defining_polynomial(long m) {
  IntPoly f(9, 0);
  f[0] = -m;
  f[8] = 1;
  return f;
}

/// Discriminant of Q(m^(1/8)) under condition (*), where it equals disc(x^8 − m) = −2^24·m^7.
/// The closed form is cross-checked against the exact resultant.
inline Int field_discriminant(long m) {
  if (!condition_star(m)) throw std::invalid_argument("field_discriminant: m violates condition (*)");
  Int mm(m);
  Int p;
  mpz_pow_ui(p.get_mpz_t(), mm.get_mpz_t(), 7);
  Int closed = -(Int(1) << 24) * p;
  if (discriminant(defining_polynomial(m)) != closed)
    throw std::logic_error("field_discriminant: resultant disagrees with closed form");
  return closed;
}

struct FieldParams {
  long m = 0;
  bool star = false;
  Int d_k = 0;
  Real r{256};  // |m|^(1/8)
  UnitSet units;
};

inline constexpr mpfr_prec_t kFieldRadicalPrecision = 256;

inline FieldParams make_field_params(long m) {
  FieldParams fp;
  fp.m = m;
  fp.star = condition_star(m);
  if (m >= 0) throw std::invalid_argument("make_field_params: m must be negative");
  mpfr_rootn_ui(fp.r.get(), Real(-m, kFieldRadicalPrecision).get(), 8, MPFR_RNDN);
  if (fp.star) {
    fp.d_k = field_discriminant(m);
    fp.units = units_of(m);
  }
  return fp;
}

/// Fields with m in (lo, hi] satisfying (*), by descending m. A squared-prime sieve
/// over the range replaces per-value trial division.
inline std::vector<FieldParams> enumerate_fields(long lo, long hi) {
  if (hi > -1) throw std::invalid_argument("enumerate_fields: hi must be ≤ −1");
  std::vector<FieldParams> out;
  if (lo >= hi) return out;
  // n = |m| ranges over [|hi|, |lo|)
  const unsigned long nmin = static_cast<unsigned long>(-hi);
  const unsigned long nmax = static_cast<unsigned long>(-(lo + 1));
  std::vector<bool> square_free(nmax - nmin + 1, true);
  for (unsigned long p = 2; p * p <= nmax; ++p) {
    const unsigned long q = p * p;
    for (unsigned long k = ((nmin + q - 1) / q) * q; k <= nmax; k += q) square_free[k - nmin] = false;
  }
  for (unsigned long n = nmin; n <= nmax; ++n) {
    const long m = -static_cast<long>(n);
    long r = m % 4;
    if (r < 0) r += 4;
    if (!square_free[n - nmin] || r == 1) continue;
    out.push_back(make_field_params(m));
  }
  return out;
}

}  // namespace octic

#endif  // OCTIC_FIELD_SCAN_HPP
