#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "algcon/unipoly.hpp"

namespace algcon {

template <class R>
using Matrix = std::vector<std::vector<R>>;

/// det(lambda*I - A) by Berkowitz's division-free recursion. Works over any
/// commutative ring with unit (integers, polynomials in a parameter).
template <class R>
UniPoly<R> berkowitz_monic(const Matrix<R>& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  // Coefficients in descending powers of lambda, leading 1.
  std::vector<R> p{R(1)};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C
    std::vector<R> t;
    t.reserve(r + 2);
    t.push_back(R(1));
    t.push_back(-a[r][r]);
    std::vector<R> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = a[i][r];
    for (std::size_t k = 0; k < r; ++k) {
      R s(0);
      for (std::size_t j = 0; j < r; ++j) s = s + a[r][j] * v[j];
      t.push_back(-s);
      if (k + 1 < r) {
        std::vector<R> w(r, R(0));
        for (std::size_t i = 0; i < r; ++i) {
          R acc(0);
          for (std::size_t j = 0; j < r; ++j) acc = acc + a[i][j] * v[j];
          w[i] = acc;
        }
        v = std::move(w);
      }
    }
    std::vector<R> q(r + 2, R(0));
    for (std::size_t i = 0; i < r + 2; ++i) {
      R acc(0);
      for (std::size_t j = 0; j <= i && j < r + 1; ++j) acc = acc + t[i - j] * p[j];
      q[i] = acc;
    }
    p = std::move(q);
  }
  std::vector<R> asc(p.rbegin(), p.rend());
  return UniPoly<R>(std::move(asc));
}

/// det(A - lambda*I) = (-1)^n det(lambda*I - A).
template <class R>
UniPoly<R> char_poly(const Matrix<R>& a) {
  UniPoly<R> p = berkowitz_monic(a);
  return a.size() % 2 == 0 ? p : -p;
}

}  // namespace algcon
