#ifndef OCTIC_QUAD_INT_HPP
#define OCTIC_QUAD_INT_HPP

#include <algorithm>
#include <concepts>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "octic/condition.hpp"
#include "octic/mp_real.hpp"

namespace octic {

/// a + b·√m in Z[√m]; the ambient m lives in QuadRing.
struct QuadInt {
  Int a = 0;
  Int b = 0;

  QuadInt() = default;
  QuadInt(Int a_, Int b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}  // NOLINT: implicit from Int
  template <std::integral T, std::integral U = long>
  QuadInt(T a_, U b_ = 0) : a(static_cast<long>(a_)), b(static_cast<long>(b_)) {}  // NOLINT

  bool is_zero() const { return a == 0 && b == 0; }

  friend bool operator==(const QuadInt& x, const QuadInt& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const QuadInt& x, const QuadInt& y) { return !(x == y); }
  friend bool operator<(const QuadInt& x, const QuadInt& y) {
    int c = cmp(x.a, y.a);
    return c != 0 ? c < 0 : x.b < y.b;
  }

  friend QuadInt operator+(const QuadInt& x, const QuadInt& y) { return {x.a + y.a, x.b + y.b}; }
  friend QuadInt operator-(const QuadInt& x, const QuadInt& y) { return {x.a - y.a, x.b - y.b}; }
  friend QuadInt operator-(const QuadInt& x) { return {-x.a, -x.b}; }
  QuadInt& operator+=(const QuadInt& y) {
    a += y.a;
    b += y.b;
    return *this;
  }
  QuadInt& operator-=(const QuadInt& y) {
    a -= y.a;
    b -= y.b;
    return *this;
  }
  /// Multiplication by a rational integer.
  friend QuadInt operator*(const Int& k, const QuadInt& x) { return {k * x.a, k * x.b}; }

  /// "a", "b*sqrt(m)" or "a+b*sqrt(m)".
  std::string to_string() const {
    if (b == 0) return a.get_str();
    std::string s = b == 1 ? "" : (b == -1 ? "-" : b.get_str() + "*");
    s += "sqrt(m)";
    if (a == 0) return s;
    return a.get_str() + (b > 0 ? "+" : "") + s;
  }
};

inline std::ostream& operator<<(std::ostream& os, const QuadInt& x) { return os << x.to_string(); }

/// The unit group of Z[√m] for m < 0 under condition (*).
struct UnitSet {
  std::vector<QuadInt> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(const QuadInt& x) const {
    return std::find(elements.begin(), elements.end(), x) != elements.end();
  }
  auto begin() const { return elements.begin(); }
  auto end() const { return elements.end(); }
};

/// {1, −1}, or {1, −1, i, −i} for m = −1 (i = √m). Throws for m ≥ 0 or m violating (*).
inline UnitSet units_of(long m) {
  if (m >= 0) throw std::invalid_argument("units_of: m must be negative");
  if (!condition_star(m)) throw std::invalid_argument("units_of: m violates the square-free / mod 4 condition");
  if (m == -1) return {{QuadInt(1), QuadInt(-1), QuadInt(0, 1), QuadInt(0, -1)}};
  return {{QuadInt(1), QuadInt(-1)}};
}

/// Arithmetic in the imaginary quadratic order Z[√m], m < 0.
class QuadRing {
 public:
  explicit QuadRing(long m) : m_(m) {
    if (m >= 0) throw std::invalid_argument("QuadRing: m must be negative");
  }

  long m() const { return m_; }
  QuadInt sqrt_m() const { return {0, 1}; }

  QuadInt mul(const QuadInt& x, const QuadInt& y) const {
    return {x.a * y.a + m_ * (x.b * y.b), x.a * y.b + x.b * y.a};
  }
  QuadInt sqr(const QuadInt& x) const { return mul(x, x); }
  QuadInt pow(QuadInt x, unsigned k) const {
    QuadInt r(1);
    while (k > 0) {
      if (k & 1u) r = mul(r, x);
      k >>= 1u;
      if (k > 0) x = sqr(x);
    }
    return r;
  }
  QuadInt conj(const QuadInt& x) const { return {x.a, -x.b}; }

  /// a² − m·b².
  Int norm(const QuadInt& x) const { return x.a * x.a - m_ * (x.b * x.b); }

  bool is_unit(const QuadInt& x) const { return norm(x) == 1; }

  /// x / y when the quotient lies in Z[√m].
  std::optional<QuadInt> exact_div(const QuadInt& x, const QuadInt& y) const {
    if (y.is_zero()) return std::nullopt;
    Int n = norm(y);
    QuadInt t = mul(x, conj(y));
    if (!mpz_divisible_p(t.a.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(t.b.get_mpz_t(), n.get_mpz_t()))
      return std::nullopt;
    Int qa, qb;
    mpz_divexact(qa.get_mpz_t(), t.a.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(qb.get_mpz_t(), t.b.get_mpz_t(), n.get_mpz_t());
    return QuadInt(std::move(qa), std::move(qb));
  }

  /// Inverse of a unit.
  QuadInt unit_inverse(const QuadInt& u) const {
    if (!is_unit(u)) throw std::invalid_argument("unit_inverse: not a unit");
    return conj(u);
  }

  /// Complex value of x under √m ↦ +i·√|m|, with a rigorous error radius.
  ComplexBall embed(const QuadInt& x, mpfr_prec_t prec) const {
    if (prec < 64) throw std::invalid_argument("embed: precision below 64 bits");
    ComplexBall r(prec);
    int exact_re = mpfr_set_z(r.re.get(), x.a.get_mpz_t(), MPFR_RNDN);
    Real s(prec);
    int exact_s = mpfr_sqrt_ui(s.get(), static_cast<unsigned long>(-m_), MPFR_RNDN);
    int exact_im = mpfr_mul_z(r.im.get(), s.get(), x.b.get_mpz_t(), MPFR_RNDN);
    const long p = static_cast<long>(prec);
    Radius rad;
    if (exact_re != 0) rad = rad + Radius::magnitude(r.re) * Radius::pow2(-p);
    if (exact_s != 0 || exact_im != 0) rad = rad + Radius::magnitude(r.im) * Radius::pow2(2 - p);
    r.rad = rad;
    return r;
  }

  /// All y ∈ Z[√m] with y^k = g (k ≥ 1). Floating candidates, exact verification.
  std::vector<QuadInt> kth_roots(const QuadInt& g, unsigned k) const {
    if (k == 0) throw std::invalid_argument("kth_roots: k must be positive");
    if (g.is_zero()) return {QuadInt(0)};
    const mpfr_prec_t prec =
        static_cast<mpfr_prec_t>(std::max<std::size_t>(128, std::max(bit_length(g.a), bit_length(g.b)) + 64));
    ComplexBall z = embed(g, prec);
    Real modulus(prec), arg(prec), pi(prec);
    mpfr_hypot(modulus.get(), z.re.get(), z.im.get(), MPFR_RNDN);
    mpfr_atan2(arg.get(), z.im.get(), z.re.get(), MPFR_RNDN);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    Real root_mod(prec);
    mpfr_rootn_ui(root_mod.get(), modulus.get(), k, MPFR_RNDN);
    Real sq(prec);
    mpfr_sqrt_ui(sq.get(), static_cast<unsigned long>(-m_), MPFR_RNDN);

    std::vector<QuadInt> out;
    for (unsigned t = 0; t < k; ++t) {
      Real theta(prec);
      mpfr_mul_ui(theta.get(), pi.get(), 2 * t, MPFR_RNDN);
      mpfr_add(theta.get(), theta.get(), arg.get(), MPFR_RNDN);
      mpfr_div_ui(theta.get(), theta.get(), k, MPFR_RNDN);
      Real c(prec), s(prec);
      mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
      Int a0 = (root_mod * c).round();
      Int b0 = (root_mod * s / sq).round();
      for (int da = -1; da <= 1; ++da) {
        for (int db = -1; db <= 1; ++db) {
          QuadInt cand(a0 + da, b0 + db);
          if (pow(cand, k) == g) out.push_back(std::move(cand));
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<QuadInt> square_roots(const QuadInt& g) const { return kth_roots(g, 2); }
  std::vector<QuadInt> fourth_roots(const QuadInt& g) const { return kth_roots(g, 4); }

 private:
  long m_;
};

}  // namespace octic

#endif  // OCTIC_QUAD_INT_HPP
