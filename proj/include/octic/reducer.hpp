#ifndef OCTIC_REDUCER_HPP
#define OCTIC_REDUCER_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "octic/conjugates.hpp"
#include "octic/lll.hpp"
#include "octic/quad_int.hpp"

namespace octic {

/// Columns of the 6×4 matrix whose top block is the identity and whose last two rows
/// hold H·Re, H·Im of the linear-form coefficients (1, √m, −α^(j0), −α^(j0)·√m),
/// rounded to integers.
struct ReductionLattice {
  std::vector<IntVector> columns;
  Int h_scale = 0;
  int j0 = 1;
  mpfr_prec_t precision = 0;
  Radius max_rounding_error;  // bound on |stored − exact| over rows 5, 6
};

inline ReductionLattice build_reduction_lattice(long m, int j0, const Int& h_scale, mpfr_prec_t guard_bits = 64) {
  if (j0 < 1 || j0 > 4) throw std::invalid_argument("build_reduction_lattice: j0 must be in 1..4");
  ReductionLattice lat;
  lat.h_scale = h_scale;
  lat.j0 = j0;
  lat.precision = static_cast<mpfr_prec_t>(bit_length(h_scale)) + guard_bits;
  const mpfr_prec_t p = lat.precision;
  const QuadRing ring(m);
  const ComplexBall alpha = relative_conjugates(m, p)[static_cast<std::size_t>(j0 - 1)];
  const ComplexBall sm = ring.embed(ring.sqrt_m(), p);
  const ComplexBall one = ring.embed(QuadInt(1), p);
  const std::array<ComplexBall, 4> coeffs{one, sm, -alpha, -(alpha * sm)};
  Radius worst;
  for (std::size_t k = 0; k < 4; ++k) {
    IntVector col(6, 0);
    col[k] = 1;
    ComplexBall v = scale(coeffs[k], h_scale);
    col[4] = v.re.round();
    col[5] = v.im.round();
    if (worst < v.rad) worst = v.rad;
    lat.columns.push_back(std::move(col));
  }
  lat.max_rounding_error = worst + Radius::pow2(-1);
  if (!lat.max_rounding_error.less_than(1.0))
    throw std::logic_error("build_reduction_lattice: rounding error bound not below 1");
  return lat;
}

struct LllResult {
  std::vector<IntVector> basis;
  Int first_vector_norm_sq = 0;
};

inline LllResult lll_reduce(const ReductionLattice& lat) {
  LllResult r;
  r.basis = lll_reduce(lat.columns);
  r.first_vector_norm_sq = norm_sq(r.basis.front());
  return r;
}

struct ReductionStep {
  Int c_in;
  Int h_scale;
  Int first_vector_norm_sq;
  Int c_out;
};

struct ReductionTrace {
  int j0 = 1;
  std::vector<ReductionStep> steps;
  Int reduced_bound = 0;  // last C_out, or C0 when no step succeeded
  bool failed = false;
  std::string failure;

  /// The bound used for enumeration: the estimates behind the reduction need |B| ≥ 10.
  Int final_bound() const { return reduced_bound < 10 ? Int(10) : reduced_bound; }
};

struct ReductionPolicy {
  long h_multiplier = 10;    // H = h_multiplier·C² on the first attempt
  long escalation = 2;       // H is multiplied by this when ℓ1 is too short
  int max_escalations = 24;  // per step
  mpfr_prec_t guard_bits = 64;
};

/// Largest integer c with c³ ≤ d·H/C.
inline Int reduced_bound_from(const Rat& d, const Int& h_scale, const Int& c) {
  Int num = d.get_num() * h_scale;
  Int den = d.get_den() * c;
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Int r;
  mpz_root(r.get_mpz_t(), q.get_mpz_t(), 3);
  return r;
}

/// Iterated reduction of C for one relative conjugate. A step with scale H is accepted
/// when |ℓ1|² ≥ 40·C², giving C ≤ (d·H/C)^(1/3). The iteration ends when C < 10 or no
/// admissible H can lower C further.
inline ReductionTrace reduce_bound(long m, int j0, const Int& c0, const Rat& d, const ReductionPolicy& policy = {}) {
  if (c0 < 10) throw std::invalid_argument("reduce_bound: C0 must be ≥ 10");
  ReductionTrace tr;
  tr.j0 = j0;
  Int c = c0;
  while (c >= 10) {
    Int h = policy.h_multiplier * c * c;
    bool accepted = false;
    bool stalled = false;
    for (int attempt = 0; attempt <= policy.max_escalations; ++attempt, h *= policy.escalation) {
      Int c_new = reduced_bound_from(d, h, c);
      if (c_new >= c) {
        stalled = true;
        break;
      }
      ReductionLattice lat = build_reduction_lattice(m, j0, h, policy.guard_bits);
      LllResult red = lll_reduce(lat);
      if (red.first_vector_norm_sq >= 40 * c * c) {
        tr.steps.push_back({c, h, red.first_vector_norm_sq, c_new});
        c = c_new;
        accepted = true;
        break;
      }
    }
    if (stalled) break;
    if (!accepted) {
      tr.failed = true;
      tr.failure = "first-vector condition not met within " + std::to_string(policy.max_escalations) +
                   " escalations at C = " + c.get_str();
      break;
    }
  }
  tr.reduced_bound = c;
  return tr;
}

struct FieldReduction {
  std::array<ReductionTrace, 4> traces;
  Int enumeration_bound = 10;
  bool failed = false;
};

/// Reduction for j0 = 1..4; the enumeration bound is the largest final bound.
inline FieldReduction reduce_field(long m, const Int& c0, const Rat& d, const ReductionPolicy& policy = {}) {
  FieldReduction fr;
  for (int j0 = 1; j0 <= 4; ++j0) {
    ReductionTrace t = reduce_bound(m, j0, c0, d, policy);
    fr.failed = fr.failed || t.failed;
    if (t.final_bound() > fr.enumeration_bound) fr.enumeration_bound = t.final_bound();
    fr.traces[static_cast<std::size_t>(j0 - 1)] = std::move(t);
  }
  return fr;
}

struct ReductionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int field_enumeration_bound(long m, const Int& c0, const Rat& d, const ReductionPolicy& policy = {}) {
  FieldReduction fr = reduce_field(m, c0, d, policy);
  if (fr.failed) throw ReductionFailure("reduction failed for m = " + std::to_string(m));
  return fr.enumeration_bound;
}

}  // namespace octic

#endif  // OCTIC_REDUCER_HPP
