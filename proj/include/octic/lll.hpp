#ifndef OCTIC_LLL_HPP
#define OCTIC_LLL_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "octic/mp_real.hpp"

namespace octic {

using IntVector = std::vector<Int>;

inline Int dot(const IntVector& x, const IntVector& y) {
  Int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline Int norm_sq(const IntVector& x) { return dot(x, x); }

namespace detail {

/// Nearest integer to a/b, b > 0.
inline Int round_div(const Int& a, const Int& b) {
  Int q;
  Int num = 2 * a + b;
  Int den = 2 * b;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

inline Int exact_quotient(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace detail

/// Integral LLL (all quantities exact integers: d_i are Gram determinants and
/// λ_ij = d_j·μ_ij), Lovász parameter 3/4. `basis` holds linearly independent vectors;
/// the reduced basis replaces it in place.
inline void lll_reduce_in_place(std::vector<IntVector>& b) {
  const std::size_t n = b.size();
  if (n <= 1) return;
  // 1-based indices to follow the usual presentation; d[0] = 1
  std::vector<Int> d(n + 1, 0);
  std::vector<std::vector<Int>> lam(n + 1, std::vector<Int>(n + 1, 0));
  d[0] = 1;
  d[1] = norm_sq(b[0]);
  if (d[1] == 0) throw std::invalid_argument("lll: zero vector in basis");

  auto bv = [&](std::size_t k) -> IntVector& { return b[k - 1]; };

  auto red = [&](std::size_t k, std::size_t l) {
    Int two_lam = 2 * lam[k][l];
    if (abs(two_lam) <= d[l]) return;
    Int q = detail::round_div(lam[k][l], d[l]);
    IntVector& vk = bv(k);
    const IntVector& vl = bv(l);
    for (std::size_t i = 0; i < vk.size(); ++i) vk[i] -= q * vl[i];
    lam[k][l] -= q * d[l];
    for (std::size_t i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };

  std::size_t kmax = 1;
  auto swap_k = [&](std::size_t k) {
    std::swap(bv(k), bv(k - 1));
    for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    const Int l = lam[k][k - 1];
    const Int bb = detail::exact_quotient(d[k - 2] * d[k] + l * l, d[k - 1]);
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const Int t = lam[i][k];
      lam[i][k] = detail::exact_quotient(d[k] * lam[i][k - 1] - l * t, d[k - 1]);
      lam[i][k - 1] = detail::exact_quotient(bb * t + l * lam[i][k], d[k]);
    }
    d[k - 1] = bb;
  };

  std::size_t k = 2;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        Int u = dot(bv(k), bv(j));
        for (std::size_t i = 1; i < j; ++i) u = detail::exact_quotient(d[i] * u - lam[k][i] * lam[j][i], d[i - 1]);
        if (j < k)
          lam[k][j] = u;
        else {
          d[k] = u;
          if (u == 0) throw std::invalid_argument("lll: basis vectors are linearly dependent");
        }
      }
    }
    red(k, k - 1);
    // Lovász: d_k·d_{k−2} ≥ (3/4)·d_{k−1}² − λ²  ⇔  4·d_k·d_{k−2} ≥ 3·d_{k−1}² − 4·λ²
    Int lhs = 4 * d[k] * d[k - 2];
    Int rhs = 3 * d[k - 1] * d[k - 1] - 4 * lam[k][k - 1] * lam[k][k - 1];
    if (lhs < rhs) {
      swap_k(k);
      if (k > 2) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 1;) red(k, l);
      ++k;
    }
  }
}

inline std::vector<IntVector> lll_reduce(std::vector<IntVector> basis) {
  lll_reduce_in_place(basis);
  return basis;
}

}  // namespace octic

#endif  // OCTIC_LLL_HPP
