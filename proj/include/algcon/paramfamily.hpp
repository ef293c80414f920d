#pragma once

#include <optional>
#include <vector>

#include "algcon/cfun.hpp"
#include "algcon/degree.hpp"
#include "algcon/eulerchar.hpp"
#include "algcon/ratfunc.hpp"

namespace algcon {

/// Polynomial in y_1..y_n over Q(w).
using FamilyPolynomial = Polynomial<RatFunc>;
using FamilyMap = std::vector<FamilyPolynomial>;

/// Reads f(w, y_1..y_n) with w = variable 0 as a polynomial in y over Q(w).
FamilyPolynomial to_family(const QPolynomial& f);
FamilyMap to_family(const std::vector<QPolynomial>& F);
/// f at the parameter value w; throws std::domain_error at a pole.
QPolynomial specialize_at(const FamilyPolynomial& f, const Rational& w);
Map specialize_at(const FamilyMap& F, const Rational& w);

struct GenericQuotient {
  QuotientAlgebra<RatFunc> algebra;
  std::vector<QPoly> sigma_polys;  // pivot leads (numerators and denominators)
};
GenericQuotient generic_quotient(const FamilyMap& F,
                                 const QuotientOptions& opt = QuotientOptions::from_environment());

struct GenericSignatureData {
  Matrix<QPoly> T;                    // L^2 * B, L the lcm of the entry denominators
  std::vector<QPoly> charpoly_coeffs; // det(T - x I), ascending
  std::vector<QPoly> sigma_polys;
  Staircase staircase;
};
GenericSignatureData parametric_signature(const FamilyMap& F,
                                          const QuotientOptions& opt = QuotientOptions::from_environment());

struct FamilyOptions {
  DegreeOptions degree;    // pointwise runs and the generic quotient
  std::optional<int> forced_k;
  int k_steps = 6;
};

struct FamilyResult {
  SumOfSigns value;                        // exact at every point except `unresolved`
  SumOfSigns generic;                      // exact off the exceptional set
  std::vector<QPoly> sigma_polys;          // defining polynomials of the exceptional set
  std::vector<AlgebraicPoint> unresolved;  // irrational exceptional points
  std::optional<int> k;                    // regularization exponent, if one was needed
  /// chi_family only: the same function as a step function; its point values
  /// at `unresolved` are not reliable.
  std::optional<StepFunction> steps;
  /// False when no sum of signs could be produced (irrational jump data that
  /// the gcd-based splitting cannot separate); `steps` is then the result.
  bool symbolic = true;
  bool exact() const { return symbolic && unresolved.empty(); }
};

/// w -> deg_0 F_w.
FamilyResult degree_family(const FamilyMap& F, const FamilyOptions& opt = {});
FamilyResult degree_family(const std::vector<QPolynomial>& F, const FamilyOptions& opt = {});

/// w -> chi({h_w <= 0} cap S_eps) for a family of germs h_w at 0 in R^n.
FamilyResult halfset_family(const FamilyPolynomial& h, const FamilyOptions& opt = {});

/// w -> chi(X_w) for X cut out by the generators in (w, y_1..y_n), w = variable 0.
FamilyResult chi_family(const std::vector<QPolynomial>& gens, std::size_t nvars,
                        const FamilyOptions& opt = {});

}  // namespace algcon
