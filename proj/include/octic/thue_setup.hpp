#ifndef OCTIC_THUE_SETUP_HPP
#define OCTIC_THUE_SETUP_HPP

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "octic/conjugates.hpp"
#include "octic/field_scan.hpp"
#include "octic/quad_int.hpp"

namespace octic {

/// Coefficients of the relative minimal polynomial x^4 + a1·x^3 + a2·x^2 + a3·x + a4 over Z[√m].
struct QuarticRelativeData {
  QuadInt a1, a2, a3, a4;
};

/// x^4 − √m: the relative minimal polynomial of m^(1/8) over Q(√m).
inline QuarticRelativeData pure_octic_relative(const QuadRing& ring) {
  return {QuadInt(0), QuadInt(0), QuadInt(0), -ring.sqrt_m()};
}

/// Ternary quadratic form, coefficients of X², XY, Y², XZ, YZ, Z².
struct TernaryQuadratic {
  std::array<QuadInt, 6> c;

  QuadInt operator()(const QuadRing& ring, const QuadInt& x, const QuadInt& y, const QuadInt& z) const {
    const std::array<QuadInt, 6> mono{ring.mul(x, x), ring.mul(x, y), ring.mul(y, y),
                                      ring.mul(x, z), ring.mul(y, z), ring.mul(z, z)};
    QuadInt s;
    for (std::size_t i = 0; i < 6; ++i) s += ring.mul(c[i], mono[i]);
    return s;
  }
};

/// Binary cubic form, coefficients of U³, U²V, UV², V³.
struct BinaryCubic {
  std::array<QuadInt, 4> c;

  QuadInt operator()(const QuadRing& ring, const QuadInt& u, const QuadInt& v) const {
    const QuadInt u2 = ring.sqr(u);
    const QuadInt v2 = ring.sqr(v);
    return ring.mul(c[0], ring.mul(u2, u)) + ring.mul(c[1], ring.mul(u2, v)) + ring.mul(c[2], ring.mul(u, v2)) +
           ring.mul(c[3], ring.mul(v2, v));
  }
};

/// The cubic resolvent F and the quadratic forms Q1, Q2 attached to a quartic relative
/// extension: δ = Xα + Yα² + Zα³ has relative index F(Q1(X,Y,Z), Q2(X,Y,Z)) up to sign.
struct ResolventForms {
  BinaryCubic f;
  TernaryQuadratic q1;
  TernaryQuadratic q2;
};

inline ResolventForms build_resolvent_forms(const QuarticRelativeData& q, const QuadRing& ring) {
  auto mul = [&](const QuadInt& x, const QuadInt& y) { return ring.mul(x, y); };
  const QuadInt four(4);
  ResolventForms r;
  r.f.c = {QuadInt(1), -q.a2, mul(q.a1, q.a3) - mul(four, q.a4),
           mul(mul(four, q.a2), q.a4) - mul(q.a3, q.a3) - mul(mul(q.a1, q.a1), q.a4)};
  r.q1.c = {QuadInt(1),
            -q.a1,
            q.a2,
            mul(q.a1, q.a1) - mul(QuadInt(2), q.a2),
            q.a3 - mul(q.a1, q.a2),
            mul(q.a2, q.a2) - mul(q.a1, q.a3) + q.a4};
  r.q2.c = {QuadInt(0), QuadInt(0), QuadInt(1), QuadInt(-1), -q.a1, q.a2};
  return r;
}

/// All (U, V) with U a unit and F(U, V) a unit, for cubic forms without U²V and V³ terms
/// (the pure-octic case F = U(U² + 4√m·V²)). For each pair η = U, ε = F(U, V) in the
/// unit set, V² = (ε·η⁻¹ − η²)/c where c is the UV² coefficient; divisibility is checked
/// exactly and V is recovered by an exact square root.
inline std::vector<std::pair<QuadInt, QuadInt>> solve_unit_equation(const ResolventForms& forms,
                                                                   const UnitSet& units,
                                                                   const QuadRing& ring) {
  if (!forms.f.c[1].is_zero() || !forms.f.c[3].is_zero() || forms.f.c[0] != QuadInt(1))
    throw std::invalid_argument("solve_unit_equation: expects F = U³ + c·U·V²");
  const QuadInt& c = forms.f.c[2];
  std::vector<std::pair<QuadInt, QuadInt>> out;
  for (const QuadInt& eta : units) {
    for (const QuadInt& eps : units) {
      QuadInt num = ring.mul(eps, ring.unit_inverse(eta)) - ring.sqr(eta);
      auto v2 = ring.exact_div(num, c);
      if (!v2) continue;
      for (QuadInt& v : ring.square_roots(*v2)) {
        if (forms.f(ring, eta, v) != eps) throw std::logic_error("solve_unit_equation: verification failed");
        out.emplace_back(eta, std::move(v));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Intermediate values of the coordinate bound chain.
struct InitialBound {
  Real c0{256};       // (1 + √range)·10^exponent, bounds |X|, |Y|, |Z|
  Real pq_bound{256}; // 2·c0 ≥ |PQ|
  Real p_sq_bound{256};  // 6·c0 ≥ |P|²
  Real ab_bound{256};    // 2·√(6·c0) ≥ max(|A|, |B|)
  Int C0 = 0;            // smallest power of ten ≥ ab_bound
  int C0_exponent = 0;
};

inline InitialBound initial_bound(int coordinate_bound_exponent = 200, long range_magnitude = 5000) {
  if (coordinate_bound_exponent < 1) throw std::invalid_argument("initial_bound: exponent must be ≥ 1");
  if (range_magnitude < 1) throw std::invalid_argument("initial_bound: range magnitude must be ≥ 1");
  constexpr mpfr_prec_t p = 256;
  InitialBound ib;
  Int ten_e;
  mpz_ui_pow_ui(ten_e.get_mpz_t(), 10, static_cast<unsigned long>(coordinate_bound_exponent));
  Real root(p);
  mpfr_sqrt_ui(root.get(), static_cast<unsigned long>(range_magnitude), MPFR_RNDU);
  ib.c0 = (Real(1L, p) + root) * Real(ten_e, p);
  ib.pq_bound = Real(2L, p) * ib.c0;
  ib.p_sq_bound = Real(6L, p) * ib.c0;
  ib.ab_bound = Real(2L, p) * sqrt(ib.p_sq_bound);
  // smallest k with 2·√(6·c0) ≤ 10^k, i.e. 24·10^e·(1 + √R) ≤ 10^(2k), decided exactly
  const Int a = 24 * ten_e;
  for (int k = 0;; ++k) {
    Int t;
    mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(2 * k));
    if (t <= a) continue;
    Int lhs = a * a * range_magnitude;
    Int rhs = (t - a) * (t - a);
    if (lhs <= rhs) {
      ib.C0_exponent = k;
      mpz_ui_pow_ui(ib.C0.get_mpz_t(), 10, static_cast<unsigned long>(k));
      break;
    }
  }
  return ib;
}

/// (1.1/0.9)³/4 = 1331/2916 before rounding.
inline Rat analytic_reduction_constant() { return Rat(1331, 2916); }

/// Product over j ≠ j0 of |α^(j) − α^(j0)| for each j0, evaluated numerically.
inline std::array<double, 4> conjugate_difference_products(long m) {
  const auto al = relative_conjugates(m, 256);
  std::array<double, 4> out{};
  for (std::size_t j0 = 0; j0 < 4; ++j0) {
    double prod = 1.0;
    for (std::size_t j = 0; j < 4; ++j)
      if (j != j0) prod *= mid_distance(al[j], al[j0]).to_double();
    out[j0] = prod;
  }
  return out;
}

/// The reduction constant d = 0.4564 in |β^(j0)| ≤ d·C^(−3). The bound is uniform in m
/// because Π_{j≠j0} |α^(j) − α^(j0)| = 4·|m|^(3/8) cancels the (1.1·|m|^(1/8))³ factor;
/// that product is checked numerically here.
inline Rat reduction_constant(long m) {
  if (!condition_star(m) || m >= 0) throw std::invalid_argument("reduction_constant: m must satisfy (*)");
  const double r = std::pow(static_cast<double>(-m), 1.0 / 8.0);
  const double expect = 4.0 * r * r * r;
  for (double prod : conjugate_difference_products(m))
    if (std::abs(prod - expect) > 1e-12 * expect)
      throw std::runtime_error("reduction_constant: conjugate difference product deviates from 4·r³");
  return Rat(4564, 10000);
}

/// A⁴ − √m·B⁴ = ρ over Z[√m] with C = max(|a1|, |b1|, |a2|, |b2|) ≤ C0.
struct ThueProblem {
  long m = 0;
  UnitSet rhos;
  Int C0 = 0;
  Rat d;
  std::array<double, 3> delta_geometry{};  // {√2·r, √2·r, 2·r}
};

inline ThueProblem make_thue_problem(const FieldParams& fp, const Int& C0) {
  if (!fp.star) throw std::invalid_argument("make_thue_problem: field does not satisfy (*)");
  ThueProblem tp;
  tp.m = fp.m;
  tp.rhos = fp.units;
  tp.C0 = C0;
  tp.d = reduction_constant(fp.m);
  const double r = fp.r.to_double();
  tp.delta_geometry = {std::sqrt(2.0) * r, std::sqrt(2.0) * r, 2.0 * r};
  return tp;
}

/// A⁴ − √m·B⁴.
inline QuadInt thue_form(const QuadRing& ring, const QuadInt& a, const QuadInt& b) {
  return ring.pow(a, 4) - ring.mul(ring.sqrt_m(), ring.pow(b, 4));
}

/// P⁴ − 4P³Q + 6P²Q² − 4PQ³ + (1 − √m)Q⁴, the value of Q1 on the parametrized (X, Y, Z).
inline QuadInt parametrized_quartic(const QuadRing& ring, const QuadInt& p, const QuadInt& q) {
  const QuadInt p2 = ring.sqr(p), q2 = ring.sqr(q);
  const QuadInt p3 = ring.mul(p2, p), q3 = ring.mul(q2, q);
  return ring.sqr(p2) - Int(4) * ring.mul(p3, q) + Int(6) * ring.mul(p2, q2) - Int(4) * ring.mul(p, q3) +
         ring.mul(QuadInt(1, -1), ring.sqr(q2));
}

}  // namespace octic

#endif  // OCTIC_THUE_SETUP_HPP
