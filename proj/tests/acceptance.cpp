// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any required
// criterion fails. Set OCTIC_FULL_RANGE=1 to include the full (−5000, −1] scan.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "octic/octic.hpp"
#include "oracles.hpp"

using namespace octic;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned tolerances and limits.
constexpr double kTableRelTol = 5e-4;                  // criterion 2: 0.05 %
constexpr double kLimitFieldCount = 1.0;               // seconds
constexpr double kLimitTable = 10.0;
constexpr double kLimitExceptional = 60.0;
constexpr double kLimitThue = 60.0;
constexpr double kLimitTheorem = 600.0;
constexpr double kLimitOracle = 900.0;
constexpr double kLimitFullRange = 6.0 * 3600.0;
constexpr long kExceptionalWindow = 5;                 // criterion 3: ±5 and never below the paper value

const Rat kD(4564, 10000);

Int pow10(unsigned long e) {
  Int z;
  mpz_ui_pow_ui(z.get_mpz_t(), 10, e);
  return z;
}

AbsGen basis(std::size_t i) {
  AbsGen g;
  g.c[i] = 1;
  return g;
}

std::vector<AbsGen> gaussian_generators() {
  std::vector<AbsGen> v{basis(1), basis(3), basis(5), basis(7)};
  std::sort(v.begin(), v.end());
  return v;
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<void(Outcome&)>& body, double limit_s,
            bool required = true) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool in_time = secs < limit_s;
  const bool ok = o.pass && in_time;
  if (!ok && required) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << "  [" << secs << " s, limit "
            << limit_s << " s]" << (in_time ? "" : " over time limit") << o.detail.str() << std::endl;
}

std::set<std::tuple<Int, Int, Int, Int>> signless(const std::vector<ThueSolution>& sols) {
  std::set<std::tuple<Int, Int, Int, Int>> out;
  for (const auto& s : sols) out.insert({s.a.a, s.a.b, s.b.a, s.b.b});
  return out;
}

}  // namespace

int main() {
  std::cout.setf(std::ios::fixed);
  std::cout.precision(2);

  report(1, "enumerate_fields(-5000, -1) has 2024 fields", [](Outcome& o) {
    const std::size_t n = enumerate_fields(-5000, -1).size();
    o.detail << "  count=" << n;
    o.pass = n == 2024;
  }, kLimitFieldCount);

  report(2, "reduction table 7.6992e33, 3.2754e11, 11434, 37 and first-vector condition for m=-2", [](Outcome& o) {
    const std::array<double, 4> table{7.6992e33, 3.2754e11, 11434, 37};
    Int c = pow10(101);
    o.detail << "  chain:";
    for (double want : table) {
      const Int next = reduced_bound_from(kD, 10 * c * c, c);
      const double err = std::abs(Real(next, 128).to_double() - want) / want;
      o.detail << " " << sci(next) << " (rel " << std::scientific << err << std::fixed << ")";
      if (!(err <= kTableRelTol)) o.pass = false;
      c = next;
    }
    // the same values from a real run: m = −197, j0 = 1 accepts H = 10·C² at each step
    const ReductionTrace t197 = reduce_bound(-197, 1, pow10(101), kD);
    o.detail << "; m=-197 trace:";
    for (const auto& s : t197.steps) o.detail << " " << sci(s.c_out);
    int unescalated = 0, steps = 0;
    for (int j0 = 1; j0 <= 4; ++j0) {
      const ReductionTrace tr = reduce_bound(-2, j0, pow10(101), kD);
      if (tr.failed) {
        o.pass = false;
        o.detail << "; m=-2 j0=" << j0 << " failed: " << tr.failure;
      }
      for (const auto& s : tr.steps) {
        ++steps;
        if (s.first_vector_norm_sq < 40 * s.c_in * s.c_in) {
          o.pass = false;
          o.detail << "; condition violated at j0=" << j0;
        }
        if (s.h_scale == 10 * s.c_in * s.c_in) ++unescalated;
      }
    }
    o.detail << "; m=-2: " << steps << " steps verified, " << unescalated << " at H=10*C^2, the rest escalated";
  }, kLimitTable);

  report(3, "enumeration bounds for m=-5,-62,-197 within +5 of 42,18,13 and not below", [](Outcome& o) {
    const std::array<std::pair<long, long>, 3> cases{{{-5, 42}, {-62, 18}, {-197, 13}}};
    o.detail << " ";
    for (const auto& [m, paper] : cases) {
      const Int c0 = initial_bound(200, -m).C0;
      const Int b = field_enumeration_bound(m, c0, kD);
      const bool ok = b >= paper && b <= paper + kExceptionalWindow;
      o.detail << " m=" << m << ": " << b << " (paper " << paper << ", " << (ok ? "ok" : "out of window") << ")";
      o.pass = o.pass && ok;
    }
  }, kLimitExceptional);

  report(4, "Thue solutions for m=-2 and m=-1", [](Outcome& o) {
    const auto s2 = enumerate_small(-2, 10);
    const std::set<std::tuple<Int, Int, Int, Int>> want2{{1, 0, 0, 0}, {-1, 0, 0, 0}};
    std::set<std::tuple<Int, Int, Int, Int>> want1;
    for (const auto& u : units_of(-1)) {
      want1.insert({u.a, u.b, 0, 0});
      want1.insert({0, 0, u.a, u.b});
    }
    const auto s1 = enumerate_small(-1, 10);
    bool rho_ok = true;
    for (const auto& s : s1) rho_ok = rho_ok && verify_solution(s, -1);
    for (const auto& s : s2) rho_ok = rho_ok && verify_solution(s, -2);
    o.pass = signless(s2) == want2 && signless(s1) == want1 && rho_ok;
    o.detail << "  m=-2: " << s2.size() << " solutions, m=-1: " << s1.size() << " solutions";
  }, kLimitThue);

  std::size_t y0_calls = 0;
  report(5, "run_range(-100, -1): generators {a} everywhere, four for m=-1", [&](Outcome& o) {
    RunConfig cfg;
    cfg.m_lo = -100;
    cfg.m_hi = -1;
    const RunSummary s = run_range(cfg);
    std::size_t bad = 0;
    for (const auto& r : s.reports) {
      y0_calls += r.y0_records.size();
      const auto want = r.m == -1 ? gaussian_generators() : std::vector<AbsGen>{basis(1)};
      if (r.status != FieldStatus::ok || r.generators != want) {
        ++bad;
        o.detail << " unexpected m=" << r.m;
      }
    }
    o.pass = bad == 0 && s.reports.size() == enumerate_fields(-100, -1).size();
    o.detail << "  fields=" << s.reports.size() << " mismatches=" << bad;
  }, kLimitTheorem);

  report(6, "oracle_scan(m, 2) equals pipeline output in the box for m=-1,-2,-5,-6", [](Outcome& o) {
    for (long m : {-1L, -2L, -5L, -6L}) {
      const FieldReport r = process_field(m, RunConfig{});
      std::vector<AbsGen> boxed;
      for (const auto& g : r.generators)
        if (std::all_of(g.c.begin(), g.c.end(), [](const Int& c) { return abs(c) <= 2; })) boxed.push_back(g);
      const auto oracle = oracle_scan(m, 2);
      const bool ok = oracle == boxed;
      o.pass = o.pass && ok;
      o.detail << "  m=" << m << ": " << oracle.size() << (ok ? " agree" : " DISAGREE");
    }
  }, kLimitOracle);

  report(7, "property suites", [&](Outcome& o) {
    std::mt19937_64 rng(1);
    std::size_t fail = 0;
    for (int i = 0; i < 10000; ++i) {
      QuadRing r(std::array<long, 3>{-1, -2, -4997}[static_cast<std::size_t>(i) % 3]);
      QuadInt x(octic::testing::random_int(rng, 50), octic::testing::random_int(rng, 50));
      QuadInt y(octic::testing::random_int(rng, 50), octic::testing::random_int(rng, 50));
      if (r.norm(r.mul(x, y)) != r.norm(x) * r.norm(y)) ++fail;
    }
    o.detail << "  norm:" << fail;
    std::size_t f2 = 0;
    for (int i = 0; i < 1000; ++i) {
      const long m = std::array<long, 3>{-1, -2, -197}[static_cast<std::size_t>(i) % 3];
      QuadRing r(m);
      QuadInt a = octic::testing::random_quad(rng, -100, 100);
      auto roots = r.fourth_roots(r.pow(a, 4));
      bool ok = std::find(roots.begin(), roots.end(), a) != roots.end();
      for (const auto& u : units_of(m))
        ok = ok && std::find(roots.begin(), roots.end(), r.mul(u, a)) != roots.end();
      if (!ok) ++f2;
    }
    o.detail << " fourth-roots:" << f2;
    std::size_t f3 = 0;
    for (int i = 0; i < 1000; ++i) {
      QuadRing ring(i % 2 ? -2 : -1);
      std::array<QuadInt, 4> rt;
      for (auto& x : rt) x = octic::testing::random_quad(rng, -5, 5);
      auto mul = [&](const QuadInt& x, const QuadInt& y) { return ring.mul(x, y); };
      QuadInt e2, e3;
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b) {
          e2 += mul(rt[a], rt[b]);
          for (std::size_t c = b + 1; c < 4; ++c) e3 += mul(mul(rt[a], rt[b]), rt[c]);
        }
      const ResolventForms f = build_resolvent_forms(
          {-(rt[0] + rt[1] + rt[2] + rt[3]), e2, -e3, mul(mul(rt[0], rt[1]), mul(rt[2], rt[3]))}, ring);
      const QuadInt x = octic::testing::random_quad(rng, -9, 9), y = octic::testing::random_quad(rng, -9, 9),
                    z = octic::testing::random_quad(rng, -9, 9);
      std::array<QuadInt, 4> d;
      for (std::size_t k = 0; k < 4; ++k) {
        const QuadInt r2 = mul(rt[k], rt[k]);
        d[k] = mul(x, rt[k]) + mul(y, r2) + mul(z, mul(r2, rt[k]));
      }
      QuadInt lhs(1), vdm(1);
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b) {
          lhs = mul(lhs, ring.sqr(d[a] - d[b]));
          vdm = mul(vdm, ring.sqr(rt[a] - rt[b]));
        }
      const QuadInt idx = f.f(ring, f.q1(ring, x, y, z), f.q2(ring, x, y, z));
      if (lhs != mul(ring.sqr(idx), vdm)) ++f3;
    }
    o.detail << " resolvent-identity:" << f3;
    std::size_t f4 = 0;
    for (int i = 0; i < 1000; ++i) {
      QuadRing ring(i % 2 ? -62 : -1);
      QuadInt a(octic::testing::random_int(rng, 20), octic::testing::random_int(rng, 20));
      QuadInt b(octic::testing::random_int(rng, 20), octic::testing::random_int(rng, 20));
      if (parametrized_quartic(ring, a + b, b) != thue_form(ring, a, b)) ++f4;
    }
    o.detail << " q1eq->ab:" << f4;
    std::size_t f5 = 0;
    std::uniform_int_distribution<long> dd(-40, 40);
    for (int i = 0; i < 1000; ++i) {
      AbsGen g;
      for (auto& c : g.c) c = dd(rng);
      const AbsGen c = canonicalize(g);
      AbsGen s = g, n;
      const Int a = dd(rng);
      s.c[0] += a;
      for (std::size_t k = 0; k < 8; ++k) n.c[k] = -g.c[k];
      n.c[0] += a;
      if (!(canonicalize(c) == c) || !(canonicalize(s) == c) || !(canonicalize(n) == c)) ++f5;
    }
    o.detail << " canonicalize:" << f5;
    // every solve_y0 call checks its interpolant at 8 fresh points and throws on mismatch;
    // criterion 5 ran them all
    o.detail << " y0 self-checks passed:" << y0_calls;
    o.pass = fail + f2 + f3 + f4 + f5 == 0 && y0_calls > 0;
  }, 600.0);

  const char* full = std::getenv("OCTIC_FULL_RANGE");
  if (full && std::string(full) == "1") {
    report(8, "run_range(-5000, -1) reproduces the Theorem for all 2024 fields", [](Outcome& o) {
      RunConfig cfg;
      cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
      const RunSummary s = run_range(cfg);
      std::size_t bad = 0;
      std::vector<long> above_ten;
      for (const auto& r : s.reports) {
        const auto want = r.m == -1 ? gaussian_generators() : std::vector<AbsGen>{basis(1)};
        if (r.status != FieldStatus::ok || r.generators != want) ++bad;
        if (r.enumeration_bound > 10) above_ten.push_back(r.m);
      }
      std::sort(above_ten.rbegin(), above_ten.rend());
      o.detail << "  fields=" << s.reports.size() << " mismatches=" << bad << " bound>10 for m in {";
      for (std::size_t i = 0; i < above_ten.size(); ++i) o.detail << (i ? "," : "") << above_ten[i];
      o.detail << "}";
      o.pass = bad == 0 && s.reports.size() == 2024;
    }, kLimitFullRange, false);
  } else {
    std::cout << "SKIP  criterion 8: full-range reproduction (set OCTIC_FULL_RANGE=1)" << std::endl;
  }

  std::cout << (failures == 0 ? "all required criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
