#ifndef OCTIC_GENERATOR_SOLVER_HPP
#define OCTIC_GENERATOR_SOLVER_HPP

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "octic/enumerator.hpp"
#include "octic/field_scan.hpp"
#include "octic/poly.hpp"
#include "octic/quad_int.hpp"

namespace octic {

/// δ = Xα + Yα² + Zα³ generating Z_K over Z[√m].
struct RelGen {
  QuadInt x, y, z;

  friend bool operator==(const RelGen& p, const RelGen& q) { return p.x == q.x && p.y == q.y && p.z == q.z; }
  friend bool operator<(const RelGen& p, const RelGen& q) {
    if (p.x != q.x) return p.x < q.x;
    if (p.y != q.y) return p.y < q.y;
    return p.z < q.z;
  }
};

/// Y² − XZ = 0 and X² − √m·Z² a unit.
inline bool relgen_valid(const RelGen& g, const QuadRing& ring, const UnitSet& units) {
  if (ring.sqr(g.y) != ring.mul(g.x, g.z)) return false;
  return units.contains(ring.sqr(g.x) - ring.mul(ring.sqrt_m(), ring.sqr(g.z)));
}

/// γ = x0 + x1α + x2α² + x3α³ + y0√m + y1α√m + y2α²√m + y3α³√m. Since √m = α⁴ the
/// coordinates (x0, x1, x2, x3, y0, y1, y2, y3) are the coefficients of α^0..α^7.
struct AbsGen {
  std::array<Int, 8> c{};

  const Int& x(int i) const { return c[static_cast<std::size_t>(i)]; }
  const Int& y(int i) const { return c[static_cast<std::size_t>(4 + i)]; }

  friend bool operator==(const AbsGen& p, const AbsGen& q) { return p.c == q.c; }
  friend bool operator<(const AbsGen& p, const AbsGen& q) {
    for (std::size_t i = 0; i < 8; ++i)
      if (p.c[i] != q.c[i]) return p.c[i] < q.c[i];
    return false;
  }

  static AbsGen from(std::array<long, 8> v) {
    AbsGen g;
    for (std::size_t i = 0; i < 8; ++i) g.c[i] = v[i];
    return g;
  }

  /// Readable form over the basis names, e.g. "a^3*sqrt(m)" for α³√m.
  std::string to_string() const {
    static const char* names[8] = {"1", "a", "a^2", "a^3", "sqrt(m)", "a*sqrt(m)", "a^2*sqrt(m)", "a^3*sqrt(m)"};
    std::string s;
    for (std::size_t i = 0; i < 8; ++i) {
      if (c[i] == 0) continue;
      std::string coef = c[i].get_str();
      if (!s.empty() && c[i] > 0) s += "+";
      if (i > 0 && c[i] == 1)
        coef = "";
      else if (i > 0 && c[i] == -1)
        coef = "-";
      else if (i > 0)
        coef += "*";
      s += coef + names[i];
    }
    return s.empty() ? "0" : s;
  }
};

/// (x1, y1, x2, y2, x3, y3, y0) as indices into AbsGen::c.
inline constexpr std::array<std::size_t, 7> kCanonicalOrder{1, 5, 2, 6, 3, 7, 4};

/// Representative of the class {a ± γ : a ∈ Z}: x0 = 0 and the first nonzero of
/// (x1, y1, x2, y2, x3, y3, y0) positive.
inline AbsGen canonicalize(AbsGen g) {
  g.c[0] = 0;
  for (std::size_t i : kCanonicalOrder) {
    if (g.c[i] == 0) continue;
    if (g.c[i] < 0)
      for (auto& v : g.c) v = -v;
    break;
  }
  return g;
}

/// Matrix of multiplication by γ on the power basis 1, α, …, α^7 (α^8 = m).
inline IntMatrix multiplication_matrix(const AbsGen& g, long m) {
  IntMatrix a(8, std::vector<Int>(8, 0));
  for (std::size_t k = 0; k < 8; ++k) {
    for (std::size_t j = 0; j < 8; ++j) {
      if (g.c[j] == 0) continue;
      const std::size_t e = j + k;
      if (e < 8)
        a[e][k] += g.c[j];
      else
        a[e - 8][k] += m * g.c[j];
    }
  }
  return a;
}

/// I(γ)² = disc(charpoly γ)/d_K; nullopt when γ is not primitive (discriminant zero).
inline std::optional<Int> index_squared(const AbsGen& g, const FieldParams& fp) {
  if (!fp.star) throw std::invalid_argument("index_squared: field does not satisfy (*)");
  const IntPoly cp = charpoly(multiplication_matrix(g, fp.m));
  const Int disc = discriminant(cp);
  if (disc == 0) return std::nullopt;
  if (!mpz_divisible_p(disc.get_mpz_t(), fp.d_k.get_mpz_t()))
    throw std::logic_error("index_squared: d_K does not divide the discriminant");
  Int q;
  mpz_divexact(q.get_mpz_t(), disc.get_mpz_t(), fp.d_k.get_mpz_t());
  return q;
}

inline bool has_index_one(const AbsGen& g, const FieldParams& fp) {
  auto v = index_squared(g, fp);
  return v && *v == 1;
}

/// Relative generators from a Thue solution: P = A + B, Q = B and
/// S·(X, Y, Z) = (−P² + 2PQ − Q², −PQ + Q², −Q²) for each unit S. Candidates with Z = 0
/// belong to trivial_family and are dropped.
inline std::vector<RelGen> back_substitute(const ThueSolution& s, long m) {
  if (!verify_solution(s, m)) throw std::invalid_argument("back_substitute: not a solution");
  const QuadRing ring(m);
  const UnitSet units = units_of(m);
  const QuadInt p = s.a + s.b;
  const QuadInt& q = s.b;
  const QuadInt pq = ring.mul(p, q);
  const QuadInt q2 = ring.sqr(q);
  const QuadInt sx = -ring.sqr(p) + Int(2) * pq - q2;
  const QuadInt sy = -pq + q2;
  const QuadInt sz = -q2;
  std::set<RelGen> out;
  for (const QuadInt& u : units) {
    const QuadInt ui = ring.unit_inverse(u);
    RelGen g{ring.mul(ui, sx), ring.mul(ui, sy), ring.mul(ui, sz)};
    if (g.z.is_zero()) continue;
    if (relgen_valid(g, ring, units)) out.insert(std::move(g));
  }
  return {out.begin(), out.end()};
}

/// X = ε0, Y = Z = 0.
inline std::vector<RelGen> trivial_family(long m) {
  std::vector<RelGen> out;
  for (const QuadInt& u : units_of(m)) out.push_back({u, QuadInt(0), QuadInt(0)});
  std::sort(out.begin(), out.end());
  return out;
}

/// Smallest of the unit multiples u·δ.
inline RelGen unit_class_representative(const RelGen& g, const QuadRing& ring, const UnitSet& units) {
  std::optional<RelGen> best;
  for (const QuadInt& u : units) {
    RelGen h{ring.mul(u, g.x), ring.mul(u, g.y), ring.mul(u, g.z)};
    if (!best || h < *best) best = std::move(h);
  }
  return *best;
}

/// γ = y0·√m + ε·δ.
inline AbsGen assemble_generator(const Int& y0, const QuadInt& eps, const RelGen& delta, const QuadRing& ring) {
  const QuadInt x = ring.mul(eps, delta.x);
  const QuadInt y = ring.mul(eps, delta.y);
  const QuadInt z = ring.mul(eps, delta.z);
  AbsGen g;
  g.c = {Int(0), x.a, y.a, z.a, y0, x.b, y.b, z.b};
  return g;
}

struct Y0Solution {
  std::vector<Int> roots;  // y0 with I(γ) = 1
  IntPoly index_poly;      // J(y0) = I(γ)²
  int observed_degree = -1;
};

inline constexpr int kY0SamplePoints = 40;
inline constexpr long kY0SampleStart = -20;
inline constexpr int kY0CheckPoints = 8;
inline constexpr int kY0MaxDegree = 32;

/// Recovers J(y0) = I(y0·√m + ε·δ)² by exact interpolation through 40 integer points,
/// checks it at 8 further points and returns the integer roots of J − 1.
inline Y0Solution solve_y0(const RelGen& delta, const QuadInt& eps, const FieldParams& fp) {
  const QuadRing ring(fp.m);
  if (!relgen_valid(delta, ring, fp.units)) throw std::invalid_argument("solve_y0: invalid relative generator");
  if (!fp.units.contains(eps)) throw std::invalid_argument("solve_y0: epsilon is not a unit");
  std::vector<Int> xs, ys;
  long y0 = kY0SampleStart;
  for (; static_cast<int>(xs.size()) < kY0SamplePoints; ++y0) {
    auto v = index_squared(assemble_generator(Int(y0), eps, delta, ring), fp);
    if (!v) continue;  // non-primitive translate; shift the window
    xs.emplace_back(y0);
    ys.push_back(std::move(*v));
  }
  auto poly = interpolate(xs, ys);
  if (!poly) throw std::logic_error("solve_y0: interpolated index polynomial is not integral");
  Y0Solution sol;
  sol.index_poly = std::move(*poly);
  sol.observed_degree = degree(sol.index_poly);
  if (sol.observed_degree > kY0MaxDegree)
    throw std::logic_error("solve_y0: index polynomial degree " + std::to_string(sol.observed_degree) + " > 32");
  for (int i = 0; i < kY0CheckPoints; ++i, ++y0) {
    auto v = index_squared(assemble_generator(Int(y0), eps, delta, ring), fp);
    if (eval(sol.index_poly, Int(y0)) != (v ? *v : Int(0)))
      throw std::logic_error("solve_y0: interpolation self-check failed");
  }
  IntPoly p = sol.index_poly;
  if (p.empty()) p.push_back(0);
  p[0] -= 1;
  trim(p);
  if (p.empty()) throw std::logic_error("solve_y0: index is identically 1");
  for (Int& r : integer_roots(p)) {
    if (!has_index_one(assemble_generator(r, eps, delta, ring), fp))
      throw std::logic_error("solve_y0: root fails the direct index check");
    sol.roots.push_back(std::move(r));
  }
  return sol;
}

struct Y0Record {
  RelGen delta;
  QuadInt eps;
  int observed_degree = -1;
  std::vector<Int> roots;
};

struct FieldSolution {
  std::vector<RelGen> relative;  // up to unit multiples
  std::vector<Y0Record> y0_records;
  std::vector<AbsGen> generators;  // canonical, sorted
};

inline FieldSolution solve_field(const FieldParams& fp, const std::vector<ThueSolution>& thue_solutions) {
  if (!fp.star) throw std::invalid_argument("solve_field: field does not satisfy (*)");
  const QuadRing ring(fp.m);
  std::set<RelGen> rel;
  for (const RelGen& g : trivial_family(fp.m)) rel.insert(unit_class_representative(g, ring, fp.units));
  for (const ThueSolution& s : thue_solutions)
    for (const RelGen& g : back_substitute(s, fp.m)) rel.insert(unit_class_representative(g, ring, fp.units));
  FieldSolution out;
  out.relative.assign(rel.begin(), rel.end());
  std::set<AbsGen> gens;
  for (const RelGen& delta : out.relative) {
    for (const QuadInt& eps : fp.units) {
      Y0Solution ys = solve_y0(delta, eps, fp);
      out.y0_records.push_back({delta, eps, ys.observed_degree, ys.roots});
      for (const Int& y0 : ys.roots) {
        AbsGen g = assemble_generator(y0, eps, delta, ring);
        if (!has_index_one(g, fp)) throw std::logic_error("solve_field: generator fails index check");
        gens.insert(canonicalize(std::move(g)));
      }
    }
  }
  out.generators.assign(gens.begin(), gens.end());
  return out;
}

}  // namespace octic

#endif  // OCTIC_GENERATOR_SOLVER_HPP
