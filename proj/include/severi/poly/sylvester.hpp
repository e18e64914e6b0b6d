// Resultants and discriminants through fraction-free elimination of the
// Sylvester matrix.
#pragma once

#include "severi/poly/multipoly.hpp"
#include "severi/poly/unipoly.hpp"

#include <functional>
#include <string>
#include <vector>

namespace severi {

/// Determinant by Bareiss elimination with row swaps. `div_exact` must divide
/// exactly; every division the algorithm performs is exact over a domain.
template <class R>
R bareiss_determinant(std::vector<std::vector<R>> m, const R& zero, const R& one,
                      const std::function<R(const R&, const R&)>& div_exact) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  bool negate = false;
  R prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == zero) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == zero) ++p;
      if (p == n) return zero;
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = div_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = zero;
    }
    prev = m[k][k];
  }
  return negate ? zero - m[n - 1][n - 1] : m[n - 1][n - 1];
}

/// Sylvester matrix of polynomials given by coefficient lists, highest degree
/// first.
template <class R>
std::vector<std::vector<R>> sylvester_matrix(const std::vector<R>& f, const std::vector<R>& g, const R& zero) {
  const std::size_t m = f.size() - 1, n = g.size() - 1, size = m + n;
  std::vector<std::vector<R>> s(size, std::vector<R>(size, zero));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) s[r][r + j] = f[j];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) s[n + r][r + j] = g[j];
  return s;
}

namespace detail {

inline MultiPoly multipoly_div_exact(const MultiPoly& a, const MultiPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw InternalInconsistency("inexact division in fraction-free elimination");
  return *q;
}

}  // namespace detail

/// Res(f, g) for univariate polynomials. Throws std::invalid_argument on a
/// zero input.
template <class F>
F resultant(const UniPoly<F>& f, const UniPoly<F>& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
  std::vector<F> fc(f.coeffs().rbegin(), f.coeffs().rend());
  std::vector<F> gc(g.coeffs().rbegin(), g.coeffs().rend());
  return bareiss_determinant<F>(sylvester_matrix(fc, gc, F(0)), F(0), F(1),
                                [](const F& a, const F& b) { return F(a / b); });
}

/// (-1)^{n(n-1)/2} Res(f, f') / lc(f), n = deg f >= 1.
template <class F>
F discriminant(const UniPoly<F>& f) {
  const int n = f.degree();
  if (n < 1) throw std::invalid_argument("discriminant: degree must be >= 1");
  F r = resultant(f, f.derivative()) / f.lc();
  return (n * (n - 1) / 2) % 2 ? F(F(0) - r) : r;
}

/// Res_var(f, g) with coefficients in the remaining variables.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var);

/// Disc_var(f); the division by the leading coefficient is checked exact.
MultiPoly discriminant(const MultiPoly& f, const std::string& var);

}  // namespace severi
