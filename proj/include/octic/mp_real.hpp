#ifndef OCTIC_MP_REAL_HPP
#define OCTIC_MP_REAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

namespace octic {

using Int = mpz_class;
using Rat = mpq_class;

/// Owning wrapper around an mpfr_t with an explicit precision.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 128) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(const Int& z, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, z.get_mpz_t(), rnd);
  }
  Real(long x, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// Nearest integer (ties away from zero).
  Int round() const {
    Int z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDNA);
    return z;
  }
  Int floor() const {
    Int z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
    return z;
  }
  Int ceil() const {
    Int z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDU);
    return z;
  }

  std::string to_string(int digits = 20) const {
    char* buf = nullptr;
    std::string fmt = "%." + std::to_string(digits) + "Rg";
    mpfr_asprintf(&buf, fmt.c_str(), v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

 private:
  mpfr_t v_;
};

// Rounded-to-nearest helpers; each result has the precision of the first operand.

inline Real operator+(const Real& x, const Real& y) {
  Real r(std::max(x.prec(), y.prec()));
  mpfr_add(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}
inline Real operator-(const Real& x, const Real& y) {
  Real r(std::max(x.prec(), y.prec()));
  mpfr_sub(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}
inline Real operator*(const Real& x, const Real& y) {
  Real r(std::max(x.prec(), y.prec()));
  mpfr_mul(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}
inline Real operator/(const Real& x, const Real& y) {
  Real r(std::max(x.prec(), y.prec()));
  mpfr_div(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}
inline Real operator-(const Real& x) {
  Real r(x.prec());
  mpfr_neg(r.get(), x.get(), MPFR_RNDN);
  return r;
}
inline Real abs(const Real& x) {
  Real r(x.prec());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}
inline Real sqrt(const Real& x) {
  Real r(x.prec());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}
inline bool operator<(const Real& x, const Real& y) { return mpfr_less_p(x.get(), y.get()) != 0; }
inline bool operator>(const Real& x, const Real& y) { return mpfr_greater_p(x.get(), y.get()) != 0; }

/// Number of bits in |z| (0 for z = 0).
inline std::size_t bit_length(const Int& z) {
  return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

/// Non-negative error radius kept at low precision and always rounded up.
class Radius {
 public:
  static constexpr mpfr_prec_t kPrec = 64;

  Radius() : v_(kPrec) {}
  explicit Radius(const Real& x) : v_(kPrec) { mpfr_abs(v_.get(), x.get(), MPFR_RNDU); }

  const Real& value() const { return v_; }
  double to_double() const { return mpfr_get_d(v_.get(), MPFR_RNDU); }
  bool is_zero() const { return v_.is_zero(); }

  friend Radius operator+(const Radius& x, const Radius& y) {
    Radius r;
    mpfr_add(r.v_.get(), x.v_.get(), y.v_.get(), MPFR_RNDU);
    return r;
  }
  friend Radius operator*(const Radius& x, const Radius& y) {
    Radius r;
    mpfr_mul(r.v_.get(), x.v_.get(), y.v_.get(), MPFR_RNDU);
    return r;
  }
  /// |x| rounded up.
  static Radius magnitude(const Real& x) { return Radius(x); }
  /// 2^e exactly.
  static Radius pow2(long e) {
    Radius r;
    mpfr_set_ui_2exp(r.v_.get(), 1, e, MPFR_RNDU);
    return r;
  }
  static Radius from_int(const Int& z) {
    Radius r;
    mpfr_set_z(r.v_.get(), z.get_mpz_t(), MPFR_RNDU);
    mpfr_abs(r.v_.get(), r.v_.get(), MPFR_RNDU);
    return r;
  }
  bool operator<(const Radius& o) const { return mpfr_less_p(v_.get(), o.v_.get()) != 0; }
  bool less_than(double x) const { return mpfr_cmp_d(v_.get(), x) < 0; }

 private:
  Real v_;
};

/// Complex midpoint-radius ball: the true value lies within `rad` of mid (in modulus).
struct ComplexBall {
  Real re;
  Real im;
  Radius rad;

  explicit ComplexBall(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  ComplexBall(Real r, Real i, Radius e) : re(std::move(r)), im(std::move(i)), rad(std::move(e)) {}

  mpfr_prec_t prec() const { return re.prec(); }

  /// |re| + |im|, an upper bound for the modulus of the midpoint.
  Radius l1_magnitude() const { return Radius::magnitude(re) + Radius::magnitude(im); }
  /// Upper bound for the modulus of any point of the ball.
  Radius modulus_bound() const { return l1_magnitude() + rad; }

  bool contains(const ComplexBall& other) const;
};

inline ComplexBall operator+(const ComplexBall& x, const ComplexBall& y) {
  ComplexBall r(x.re + y.re, x.im + y.im, x.rad + y.rad);
  r.rad = r.rad + r.l1_magnitude() * Radius::pow2(1 - static_cast<long>(r.prec()));
  return r;
}

inline ComplexBall operator-(const ComplexBall& x) { return ComplexBall(-x.re, -x.im, x.rad); }

inline ComplexBall operator-(const ComplexBall& x, const ComplexBall& y) { return x + (-y); }

inline ComplexBall operator*(const ComplexBall& x, const ComplexBall& y) {
  ComplexBall r(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re, Radius());
  const long p = static_cast<long>(r.prec());
  Radius xm = x.l1_magnitude();
  Radius ym = y.l1_magnitude();
  // propagated error plus three roundings per component
  r.rad = xm * y.rad + ym * x.rad + x.rad * y.rad + xm * ym * Radius::pow2(2 - p);
  return r;
}

/// Multiply by an exact integer.
inline ComplexBall scale(const ComplexBall& x, const Int& k) {
  const mpfr_prec_t p = x.prec();
  ComplexBall r(p);
  mpfr_mul_z(r.re.get(), x.re.get(), k.get_mpz_t(), MPFR_RNDN);
  mpfr_mul_z(r.im.get(), x.im.get(), k.get_mpz_t(), MPFR_RNDN);
  r.rad = x.rad * Radius::from_int(k) + r.l1_magnitude() * Radius::pow2(1 - static_cast<long>(p));
  return r;
}

/// Modulus of the distance between the midpoints, rounded up.
inline Radius mid_distance(const ComplexBall& x, const ComplexBall& y) {
  Real dr = x.re - y.re;
  Real di = x.im - y.im;
  Real h(std::max(x.prec(), y.prec()));
  mpfr_hypot(h.get(), dr.get(), di.get(), MPFR_RNDU);
  return Radius::magnitude(h) + Radius::magnitude(h) * Radius::pow2(2 - static_cast<long>(h.prec()));
}

inline bool ComplexBall::contains(const ComplexBall& other) const {
  Radius d = mid_distance(*this, other) + other.rad;
  return !(rad < d);
}

/// Balls overlap, i.e. their true values may coincide.
inline bool overlaps(const ComplexBall& x, const ComplexBall& y) {
  return !(x.rad + y.rad < mid_distance(x, y));
}

}  // namespace octic

#endif  // OCTIC_MP_REAL_HPP
