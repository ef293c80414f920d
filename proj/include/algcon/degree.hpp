#pragma once

#include <optional>
#include <vector>

#include "algcon/charpoly.hpp"
#include "algcon/localring.hpp"
#include "algcon/polynomial.hpp"

namespace algcon {

using Map = std::vector<QPolynomial>;

template <class K>
struct SymmetricForm {
  Matrix<K> matrix;  // indexed by Delta in ascending local order
  K lambda;
};

/// G = F + (y_1^k, ..., y_n^k).
template <class K>
std::vector<Polynomial<K>> regularize(const std::vector<Polynomial<K>>& F, int k) {
  if (k < 1) throw Error("degree", Condition::kPrecondition, "regularization exponent must be >= 1");
  std::vector<Polynomial<K>> G = F;
  for (std::size_t i = 0; i < G.size(); ++i)
    G[i] += Polynomial<K>::monomial(Exponent::unit(G[i].nvars(), i, k), K(1));
  return G;
}

/// Jacobian determinant with every intermediate product truncated above
/// total degree `max_degree`.
template <class K>
Polynomial<K> truncated_jacobian(const std::vector<Polynomial<K>>& F, int max_degree) {
  const std::size_t n = F.size();
  Matrix<Polynomial<K>> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i].push_back(F[i].derivative(j).truncated(max_degree));
  // Laplace expansion over column subsets, row by row (n <= 6 in practice).
  std::vector<Polynomial<K>> minors(std::size_t{1} << n, Polynomial<K>(F.front().nvars()));
  minors[0] = Polynomial<K>(F.front().nvars(), K(1));
  for (std::size_t row = 0; row < n; ++row) {
    std::vector<Polynomial<K>> next(minors.size(), Polynomial<K>(F.front().nvars()));
    for (std::size_t mask = 0; mask < minors.size(); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != row || minors[mask].is_zero_poly()) continue;
      int sign_count = 0;
      for (std::size_t col = n; col-- > 0;) {
        if (mask & (std::size_t{1} << col)) {
          ++sign_count;
          continue;
        }
        if (m[row][col].is_zero_poly()) continue;
        Polynomial<K> term = (minors[mask] * m[row][col]).truncated(max_degree);
        if (sign_count % 2) term = -term;
        next[mask | (std::size_t{1} << col)] += term;
      }
    }
    minors = std::move(next);
  }
  return minors.back();
}

/// lambda with NF(J) = lambda * y^socle; SocleViolation otherwise.
template <class K>
K jacobian_socle_coefficient(const std::vector<Polynomial<K>>& F, const QuotientAlgebra<K>& q) {
  if (q.dimension() == 0) throw Error("degree", Condition::kPrecondition, "empty staircase: the map does not vanish at 0");
  Polynomial<K> J = truncated_jacobian(F, q.staircase().full_level - 1);
  std::vector<K> nf = q.normal_form(J);
  for (std::size_t i = 0; i + 1 < nf.size(); ++i)
    if (!is_zero(nf[i]))
      throw Error("degree", Condition::kSocleViolation,
                  "normal form of the Jacobian has support off the socle monomial");
  if (is_zero(nf.back())) throw Error("degree", Condition::kSocleViolation, "Jacobian class vanishes in the quotient");
  return nf.back();
}

template <class K>
SymmetricForm<K> bilinear_matrix(const QuotientAlgebra<K>& q, const K& lambda) {
  if (is_zero(lambda)) throw Error("degree", Condition::kPrecondition, "lambda must be nonzero");
  const auto& delta = q.staircase().delta;
  const std::size_t m = delta.size();
  SymmetricForm<K> out{Matrix<K>(m, std::vector<K>(m, K(0))), lambda};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      K v = lambda * q.socle_coefficient(delta[i] + delta[j]);
      out.matrix[i][j] = v;
      out.matrix[j][i] = v;
    }
  return out;
}

struct Signature {
  int value;
  int mod4;  // (n + 1 + (-1)^(n+1) sgn(a_0 a_n)) mod 4
};

/// p_plus - p_minus for a real-rooted polynomial from its coefficient signs:
/// minus the sum of sgn(a_r a_s) over consecutive nonzero coefficients with
/// r + s odd. Throws DegenerateForm when a_0 = 0.
Signature signature_descartes(const std::vector<int>& coefficient_signs);
Signature signature_descartes(const UniPoly<Rational>& p);

/// char_poly over the rationals, computed on the integer matrix obtained by
/// clearing denominators and rescaled back.
UniPoly<Rational> char_poly_rational(const Matrix<Rational>& m);

/// Signature of a rational symmetric matrix through Lemma-2.1 counting on the
/// characteristic polynomial of a positively rescaled integer copy.
int matrix_signature(const Matrix<Rational>& m);

struct DegreeOptions {
  std::optional<int> forced_k;  // regularize with exactly this k
  int k_steps = 8;              // how many k values past the start to try
  QuotientOptions quotient = QuotientOptions::from_environment();
};

struct DegreeReport {
  int degree = 0;
  std::size_t dimension = 0;       // |Delta| of the algebra used
  std::optional<int> k;            // regularization exponent, if any
  Rational lambda;
  std::vector<Rational> char_poly; // ascending coefficients
  Staircase staircase;
};

/// deg_0 F for a germ with algebraically isolated zero (run directly), or via
/// regularization with increasing k until two consecutive k agree.
DegreeReport local_degree_report(const Map& F, const DegreeOptions& opt = {});
int local_degree(const Map& F, const DegreeOptions& opt = {});

/// One run of the signature pipeline on a map with finite local algebra.
DegreeReport degree_of_finite_map(const Map& F, const QuotientOptions& qopt);

}  // namespace algcon
