#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "octic/thue_setup.hpp"
#include "oracles.hpp"

using namespace octic;
using octic::testing::random_quad;

namespace {

Int pow10(unsigned long e) {
  Int z;
  mpz_ui_pow_ui(z.get_mpz_t(), 10, e);
  return z;
}

}  // namespace

TEST(ResolventForms, PureOctic) {
  for (long m : {-1L, -2L, -197L}) {
    QuadRing ring(m);
    const ResolventForms f = build_resolvent_forms(pure_octic_relative(ring), ring);
    const QuadInt s = ring.sqrt_m();
    // F = U³ + 4√m·UV²
    EXPECT_EQ(f.f.c[0], QuadInt(1));
    EXPECT_EQ(f.f.c[1], QuadInt(0));
    EXPECT_EQ(f.f.c[2], Int(4) * s);
    EXPECT_EQ(f.f.c[3], QuadInt(0));
    // Q1 = X² − √m·Z²
    EXPECT_EQ(f.q1.c, (std::array<QuadInt, 6>{QuadInt(1), QuadInt(0), QuadInt(0), QuadInt(0), QuadInt(0), -s}));
    // Q2 = Y² − XZ
    EXPECT_EQ(f.q2.c, (std::array<QuadInt, 6>{QuadInt(0), QuadInt(0), QuadInt(1), QuadInt(-1), QuadInt(0), QuadInt(0)}));
  }
}

// For f with roots r_i and δ_i = X·r_i + Y·r_i² + Z·r_i³,
// Π_{i<j}(δ_i − δ_j)² = F(Q1, Q2)²·Π_{i<j}(r_i − r_j)².
TEST(ResolventProperty, RelativeIndexIdentity) {
  std::mt19937_64 rng(2718);
  const std::array<long, 3> ms{-1, -2, -5};
  for (int t = 0; t < 1000; ++t) {
    const long m = ms[static_cast<std::size_t>(t) % ms.size()];
    QuadRing ring(m);
    std::array<QuadInt, 4> r;
    for (auto& x : r) x = random_quad(rng, -6, 6);
    auto mul = [&](const QuadInt& x, const QuadInt& y) { return ring.mul(x, y); };
    const QuadInt e1 = r[0] + r[1] + r[2] + r[3];
    QuadInt e2, e3;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) {
        e2 += mul(r[i], r[j]);
        for (std::size_t k = j + 1; k < 4; ++k) e3 += mul(mul(r[i], r[j]), r[k]);
      }
    const QuadInt e4 = mul(mul(r[0], r[1]), mul(r[2], r[3]));
    const ResolventForms f = build_resolvent_forms({-e1, e2, -e3, e4}, ring);

    const QuadInt x = random_quad(rng, -20, 20), y = random_quad(rng, -20, 20), z = random_quad(rng, -20, 20);
    std::array<QuadInt, 4> d;
    for (std::size_t i = 0; i < 4; ++i) {
      const QuadInt r2 = mul(r[i], r[i]);
      d[i] = mul(x, r[i]) + mul(y, r2) + mul(z, mul(r2, r[i]));
    }
    QuadInt lhs(1), vdm(1);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) {
        lhs = mul(lhs, ring.sqr(d[i] - d[j]));
        vdm = mul(vdm, ring.sqr(r[i] - r[j]));
      }
    const QuadInt idx = f.f(ring, f.q1(ring, x, y, z), f.q2(ring, x, y, z));
    ASSERT_EQ(lhs, mul(ring.sqr(idx), vdm)) << "case " << t;
  }
}

TEST(ResolventProperty, ParametrizationSatisfiesForms) {
  // with SX = −(P − Q)², SY = Q² − PQ, SZ = −Q²: S²·Q2 = 0 and S²·Q1 equals the quartic in (P, Q)
  std::mt19937_64 rng(31);
  for (int t = 0; t < 1000; ++t) {
    const long m = t % 2 ? -2 : -1;
    QuadRing ring(m);
    const ResolventForms f = build_resolvent_forms(pure_octic_relative(ring), ring);
    const QuadInt p = random_quad(rng, -1000, 1000), q = random_quad(rng, -1000, 1000);
    const QuadInt pq = ring.mul(p, q), q2 = ring.sqr(q);
    const QuadInt sx = -ring.sqr(p - q), sy = q2 - pq, sz = -q2;
    ASSERT_EQ(f.q2(ring, sx, sy, sz), QuadInt(0));
    ASSERT_EQ(f.q1(ring, sx, sy, sz), parametrized_quartic(ring, p, q));
  }
}

TEST(ThueProperty, SubstitutionGivesThueForm) {
  std::mt19937_64 rng(1618);
  const std::array<long, 4> ms{-1, -2, -62, -197};
  for (int t = 0; t < 1000; ++t) {
    QuadRing ring(ms[static_cast<std::size_t>(t) % ms.size()]);
    const QuadInt a(octic::testing::random_int(rng, 25), octic::testing::random_int(rng, 25));
    const QuadInt b(octic::testing::random_int(rng, 25), octic::testing::random_int(rng, 25));
    ASSERT_EQ(parametrized_quartic(ring, a + b, b), thue_form(ring, a, b)) << "case " << t;
  }
}

TEST(UnitEquation, Examples) {
  {
    QuadRing ring(-2);
    auto sols = solve_unit_equation(build_resolvent_forms(pure_octic_relative(ring), ring), units_of(-2), ring);
    EXPECT_EQ(sols, (std::vector<std::pair<QuadInt, QuadInt>>{{QuadInt(-1), QuadInt(0)}, {QuadInt(1), QuadInt(0)}}));
  }
  {
    QuadRing ring(-1);
    auto sols = solve_unit_equation(build_resolvent_forms(pure_octic_relative(ring), ring), units_of(-1), ring);
    ASSERT_EQ(sols.size(), 4u);
    for (const auto& [u, v] : sols) {
      EXPECT_TRUE(units_of(-1).contains(u));
      EXPECT_TRUE(v.is_zero());
    }
  }
}

TEST(UnitEquation, ZeroDifferenceAdmissible) {
  // η = 1, ε = −1 gives ε·η⁻¹ − η² = −2, not divisible by 4√m; η = ε = 1 gives 0
  QuadRing ring(-2);
  EXPECT_FALSE(ring.exact_div(QuadInt(-2), QuadInt(0, 4)).has_value());
  auto z = ring.exact_div(QuadInt(0), QuadInt(0, 4));
  ASSERT_TRUE(z.has_value());
  EXPECT_TRUE(z->is_zero());
}

TEST(UnitEquation, VanishingVAcrossScope) {
  for (const auto& fp : enumerate_fields(-500, -1)) {
    QuadRing ring(fp.m);
    auto sols = solve_unit_equation(build_resolvent_forms(pure_octic_relative(ring), ring), fp.units, ring);
    ASSERT_EQ(sols.size(), fp.units.elements.size()) << fp.m;
    for (const auto& uv : sols) ASSERT_TRUE(uv.second.is_zero()) << fp.m;
  }
}

TEST(UnitEquation, RejectsGeneralForms) {
  QuadRing ring(-2);
  auto f = build_resolvent_forms({QuadInt(0), QuadInt(1), QuadInt(0), QuadInt(0, -1)}, ring);
  EXPECT_THROW(solve_unit_equation(f, units_of(-2), ring), std::invalid_argument);
}

TEST(InitialBound, Chain) {
  const InitialBound ib = initial_bound(200, 5000);
  // 2·√(6·(1 + √5000)·10^200) = 41.4856…·10^100
  const double lead = (ib.ab_bound / Real(pow10(100), 256)).to_double();
  EXPECT_NEAR(lead, 41.4856, 5e-5);
  EXPECT_NEAR((ib.c0 / Real(pow10(200), 256)).to_double(), 1.0 + std::sqrt(5000.0), 1e-12);
  EXPECT_NEAR((ib.pq_bound / ib.c0).to_double(), 2.0, 1e-15);
  EXPECT_NEAR((ib.p_sq_bound / ib.c0).to_double(), 6.0, 1e-15);
  // 4.15·10^101 exceeds 10^101, so the smallest covering power of ten is 10^102
  EXPECT_EQ(ib.C0, pow10(102));
  EXPECT_EQ(ib.C0_exponent, 102);
}

TEST(InitialBound, OtherInputs) {
  const InitialBound e100 = initial_bound(100, 5000);
  EXPECT_NEAR((e100.ab_bound / Real(pow10(50), 256)).to_double(), 41.4856, 5e-5);
  EXPECT_EQ(e100.C0, pow10(52));
  const InitialBound r1 = initial_bound(200, 1);
  EXPECT_NEAR((r1.c0 / Real(pow10(200), 256)).to_double(), 2.0, 1e-15);
  EXPECT_NEAR((r1.ab_bound / Real(pow10(100), 256)).to_double(), 2.0 * std::sqrt(12.0), 1e-12);
  EXPECT_EQ(r1.C0, pow10(101));
  EXPECT_THROW(initial_bound(0, 5000), std::invalid_argument);
  EXPECT_THROW(initial_bound(200, 0), std::invalid_argument);
}

TEST(InitialBound, ExactPowerOfTenDecision) {
  // the power-of-ten choice must agree with a direct high-precision comparison
  for (int e = 1; e <= 60; ++e)
    for (long range : {1L, 2L, 10L, 99L, 100L, 5000L}) {
      const InitialBound ib = initial_bound(e, range);
      ASSERT_FALSE(Real(ib.C0, 256) < ib.ab_bound) << e << " " << range;
      ASSERT_TRUE(Real(ib.C0 / 10, 256) < ib.ab_bound) << e << " " << range;
    }
}

TEST(InitialBound, Monotone) {
  Int prev = 0;
  for (int e = 1; e <= 220; ++e) {
    const Int c = initial_bound(e, 5000).C0;
    ASSERT_GE(c, prev);
    prev = c;
  }
  prev = 0;
  for (long r = 1; r <= 5000; r += 37) {
    const Int c = initial_bound(200, r).C0;
    ASSERT_GE(c, prev);
    prev = c;
  }
}

TEST(ReductionConstant, Value) {
  EXPECT_EQ(reduction_constant(-2), Rat(4564, 10000));
  EXPECT_EQ(reduction_constant(-1), Rat(4564, 10000));
  EXPECT_NEAR(analytic_reduction_constant().get_d(), 0.456447, 1e-6);
  EXPECT_GE(Rat(4564, 10000), analytic_reduction_constant() - Rat(1, 10000));
  EXPECT_THROW(reduction_constant(-3), std::invalid_argument);
}

TEST(ReductionConstant, DifferenceProducts) {
  for (double p : conjugate_difference_products(-1)) EXPECT_NEAR(p, 4.0, 1e-12);
  const double r = std::pow(2.0, 1.0 / 8.0);
  for (double p : conjugate_difference_products(-2)) EXPECT_NEAR(p, 4.0 * std::pow(2.0, 3.0 / 8.0), 1e-12);
  const auto al = relative_conjugates(-2, 256);
  // distances from α^(1): √2·r, 2·r, √2·r
  EXPECT_NEAR(mid_distance(al[0], al[1]).to_double(), std::sqrt(2.0) * r, 1e-14);
  EXPECT_NEAR(mid_distance(al[0], al[2]).to_double(), 2.0 * r, 1e-14);
  EXPECT_NEAR(mid_distance(al[0], al[3]).to_double(), std::sqrt(2.0) * r, 1e-14);
}

TEST(ThueProblem, Construction) {
  const FieldParams fp = make_field_params(-2);
  const ThueProblem tp = make_thue_problem(fp, pow10(101));
  EXPECT_EQ(tp.C0, pow10(101));
  EXPECT_EQ(tp.d, Rat(4564, 10000));
  EXPECT_EQ(tp.rhos.elements.size(), 2u);
  const double r = std::pow(2.0, 1.0 / 8.0);
  EXPECT_NEAR(tp.delta_geometry[2], 2.0 * r, 1e-14);
  EXPECT_THROW(make_thue_problem(make_field_params(-3), pow10(101)), std::invalid_argument);
}
