#ifndef OCTIC_POLY_HPP
#define OCTIC_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "octic/mp_real.hpp"

namespace octic {

/// Dense integer polynomial, coefficients from the constant term upwards.
using IntPoly = std::vector<Int>;
using IntMatrix = std::vector<std::vector<Int>>;

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// −1 for the zero polynomial.
inline int degree(const IntPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

inline Int eval(const IntPoly& p, const Int& x) {
  Int r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    r *= x;
    r += *it;
  }
  return r;
}

inline IntPoly derivative(const IntPoly& p) {
  IntPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

/// Fraction-free Gaussian elimination (Bareiss) with row pivoting.
inline Int determinant(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign < 0 ? Int(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

/// Res(f, g) as the determinant of the Sylvester matrix.
inline Int resultant(const IntPoly& f, const IntPoly& g) {
  const int df = degree(f);
  const int dg = degree(g);
  if (df < 0 || dg < 0) return 0;
  if (df == 0 && dg == 0) return 1;
  const std::size_t n = static_cast<std::size_t>(df + dg);
  IntMatrix s(n, std::vector<Int>(n, 0));
  for (int r = 0; r < dg; ++r)
    for (int i = 0; i <= df; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = f[static_cast<std::size_t>(df - i)];
  for (int r = 0; r < df; ++r)
    for (int i = 0; i <= dg; ++i)
      s[static_cast<std::size_t>(dg + r)][static_cast<std::size_t>(r + i)] = g[static_cast<std::size_t>(dg - i)];
  return determinant(std::move(s));
}

/// (−1)^(n(n−1)/2) · Res(f, f′) / lc(f).
inline Int discriminant(const IntPoly& f) {
  const int n = degree(f);
  if (n < 1) throw std::invalid_argument("discriminant: degree < 1");
  Int r = resultant(f, derivative(f));
  const Int& lc = f[static_cast<std::size_t>(n)];
  Int q;
  mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), lc.get_mpz_t());
  if ((n * (n - 1) / 2) % 2 != 0) q = -q;
  return q;
}

/// Monic characteristic polynomial det(x·I − A) by Faddeev–LeVerrier (exact over Z).
inline IntPoly charpoly(const IntMatrix& a) {
  const std::size_t n = a.size();
  IntPoly c(n + 1, 0);
  c[n] = 1;
  IntMatrix mk(n, std::vector<Int>(n, 0));  // M_0 = 0
  IntMatrix am(n, std::vector<Int>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A·M_{k−1} + c_{n−k+1}·I
    for (std::size_t i = 0; i < n; ++i) mk[i][i] += c[n - k + 1];
    // A·M_k
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Int s = 0;
        for (std::size_t l = 0; l < n; ++l)
          if (a[i][l] != 0 && mk[l][j] != 0) s += a[i][l] * mk[l][j];
        am[i][j] = std::move(s);
      }
    }
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    Int q;
    mpz_divexact_ui(q.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = -q;
    std::swap(mk, am);
  }
  return c;
}

/// The unique polynomial of degree < xs.size() through (xs[i], ys[i]); nullopt when a
/// coefficient is not an integer.
inline std::optional<IntPoly> interpolate(const std::vector<Int>& xs, const std::vector<Int>& ys) {
  const std::size_t n = xs.size();
  if (n == 0 || ys.size() != n) throw std::invalid_argument("interpolate: size mismatch");
  // Newton divided differences
  std::vector<Rat> dd(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      Rat num = dd[i] - dd[i - 1];
      Rat den(xs[i] - xs[i - j]);
      if (den == 0) throw std::invalid_argument("interpolate: repeated abscissa");
      dd[i] = num / den;
      if (i == j) break;
    }
  }
  // expand Σ dd[j] Π_{i<j} (x − xs[i]) by Horner from the top
  std::vector<Rat> coef(1, dd[n - 1]);
  for (std::size_t j = n - 1; j-- > 0;) {
    std::vector<Rat> next(coef.size() + 1, Rat(0));
    for (std::size_t i = 0; i < coef.size(); ++i) {
      next[i + 1] += coef[i];
      next[i] -= coef[i] * Rat(xs[j]);
    }
    next[0] += dd[j];
    coef = std::move(next);
  }
  IntPoly out;
  out.reserve(coef.size());
  for (auto& c : coef) {
    c.canonicalize();
    if (c.get_den() != 1) return std::nullopt;
    out.push_back(c.get_num());
  }
  trim(out);
  return out;
}

namespace detail {

/// Smallest integer t ≥ 0 with t^k ≥ x (x ≥ 0).
inline Int ceil_root(const Int& x, unsigned long k) {
  Int r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
  Int p;
  mpz_pow_ui(p.get_mpz_t(), r.get_mpz_t(), k);
  if (p < x) r += 1;
  return r;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline std::vector<unsigned long> small_primes(unsigned long limit) {
  std::vector<bool> comp(limit + 1, false);
  std::vector<unsigned long> ps;
  for (unsigned long i = 2; i <= limit; ++i) {
    if (comp[i]) continue;
    ps.push_back(i);
    for (unsigned long j = i * i; j <= limit; j += i) comp[j] = true;
  }
  return ps;
}

}  // namespace detail

/// Upper bound on the modulus of every complex root: min(Cauchy, Fujiwara).
inline Int root_bound(const IntPoly& p) {
  const int n = degree(p);
  if (n < 1) return 0;
  const Int lc = abs(p[static_cast<std::size_t>(n)]);
  Int cauchy = 0;
  Int fuji = 0;
  for (int i = 0; i < n; ++i) {
    const Int ai = abs(p[static_cast<std::size_t>(i)]);
    Int q = detail::ceil_div(ai, lc);
    if (q > cauchy) cauchy = q;
    const unsigned long k = static_cast<unsigned long>(n - i);
    Int base = i == 0 ? detail::ceil_div(ai, 2 * lc) : q;
    Int t = detail::ceil_root(base, k);
    if (t > fuji) fuji = t;
  }
  cauchy += 1;
  fuji *= 2;
  return std::min(cauchy, fuji);
}

/// Exhaustive search is used below this root bound; above it, residues modulo small
/// primes are combined by CRT and each candidate is checked exactly.
inline constexpr long kExhaustiveRootBound = 100000;

/// All integer roots of p ≠ 0, sorted, without multiplicity.
inline std::vector<Int> integer_roots(IntPoly p) {
  trim(p);
  if (p.empty()) throw std::invalid_argument("integer_roots: zero polynomial");
  std::vector<Int> roots;
  std::size_t v = 0;
  while (p[v] == 0) ++v;
  if (v > 0) {
    roots.push_back(0);
    p.erase(p.begin(), p.begin() + static_cast<long>(v));
  }
  const int n = degree(p);
  if (n >= 1) {
    const Int bound = root_bound(p);
    auto accept = [&](const Int& r) {
      if (r == 0) return;
      if (eval(p, r) != 0) return;
      // every nonzero integer root divides the trailing coefficient
      if (!mpz_divisible_p(p[0].get_mpz_t(), r.get_mpz_t()))
        throw std::logic_error("integer_roots: root does not divide the trailing coefficient");
      roots.push_back(r);
    };
    if (bound <= kExhaustiveRootBound) {
      const long b = bound.get_si();
      for (long x = -b; x <= b; ++x) accept(Int(x));
    } else {
      struct Residues {
        unsigned long q;
        std::vector<unsigned long> r;
      };
      std::vector<Residues> table;
      for (unsigned long q : detail::small_primes(20000)) {
        if (q < 101) continue;
        if (mpz_divisible_ui_p(p.back().get_mpz_t(), q)) continue;
        std::vector<unsigned long> cf(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) cf[i] = mpz_fdiv_ui(p[i].get_mpz_t(), q);
        Residues res{q, {}};
        for (unsigned long x = 0; x < q; ++x) {
          unsigned long acc = 0;
          for (std::size_t i = cf.size(); i-- > 0;) acc = (acc * x + cf[i]) % q;
          if (acc == 0) res.r.push_back(x);
        }
        if (res.r.empty()) {
          std::sort(roots.begin(), roots.end());
          return roots;  // no integer root at all
        }
        table.push_back(std::move(res));
        if (table.size() >= 400) break;
      }
      std::stable_sort(table.begin(), table.end(),
                       [](const Residues& x, const Residues& y) { return x.r.size() < y.r.size(); });
      Int modulus = 1;
      const Int need = 2 * bound + 1;
      std::vector<const Residues*> chosen;
      for (const auto& e : table) {
        if (modulus > need) break;
        chosen.push_back(&e);
        modulus *= static_cast<unsigned long>(e.q);
      }
      if (modulus <= need) throw std::runtime_error("integer_roots: not enough primes for the root bound");
      // CRT over the cartesian product of residue sets
      std::vector<std::pair<Int, Int>> partial{{Int(0), Int(1)}};  // (residue, modulus)
      for (const Residues* e : chosen) {
        std::vector<std::pair<Int, Int>> next;
        for (const auto& [res, mod] : partial) {
          Int inv;
          Int qz(static_cast<unsigned long>(e->q));
          mpz_invert(inv.get_mpz_t(), mod.get_mpz_t(), qz.get_mpz_t());
          for (unsigned long r : e->r) {
            // x ≡ res (mod mod), x ≡ r (mod q)
            Int t = (Int(r) - res) * inv;
            mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), qz.get_mpz_t());
            next.emplace_back(res + mod * t, mod * qz);
          }
        }
        partial = std::move(next);
        if (partial.size() > 2000000) throw std::runtime_error("integer_roots: too many CRT candidates");
      }
      for (auto& [res, mod] : partial) {
        Int r = res;
        if (2 * r > mod) r -= mod;
        if (abs(r) <= bound) accept(r);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace octic

#endif  // OCTIC_POLY_HPP
