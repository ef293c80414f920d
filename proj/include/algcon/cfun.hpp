#pragma once

#include <vector>

#include "algcon/oracle.hpp"
#include "algcon/ratfunc.hpp"

namespace algcon {

/// The function w -> sum_i sgn g_i(w) on R. Negative multiplicities are
/// written by negating the polynomial. No entry is the zero polynomial.
struct SumOfSigns {
  std::vector<QPoly> polys;

  SumOfSigns() = default;
  explicit SumOfSigns(std::vector<QPoly> p);
  std::size_t size() const { return polys.size(); }
};

/// A constructible function on R with finitely many breakpoints.
struct StepFunction {
  std::vector<AlgebraicPoint> breakpoints;  // strictly increasing
  std::vector<int> interval_values;         // breakpoints.size() + 1 entries, left to right
  std::vector<int> point_values;            // one per breakpoint

  int value_at(const Rational& w) const;
  int value_at(const AlgebraicPoint& w) const;
};

int evaluate(const SumOfSigns& phi, const Rational& w);
/// Exact value at a real algebraic number; the interval must isolate exactly
/// one root of the squarefree polynomial.
int evaluate_at_algebraic(const SumOfSigns& phi, const AlgebraicPoint& sigma);

SumOfSigns add(const SumOfSigns& a, const SumOfSigns& b);
SumOfSigns negate(const SumOfSigns& a);
SumOfSigns multiply(const SumOfSigns& a, const SumOfSigns& b);
/// n copies of the list (negated when n < 0).
SumOfSigns times(const SumOfSigns& a, int n);

/// Syntactic clean-up: positive scalars stripped, g replaced by the product of
/// its squarefree factors with odd multiplicity times the squares of the others,
/// and exact +-g pairs cancelled. Denotes the same function.
SumOfSigns canonicalize(const SumOfSigns& a);

/// Pointwise equality of the denoted functions.
bool equals(const SumOfSigns& a, const SumOfSigns& b);
bool equals(const StepFunction& s, const SumOfSigns& a);

/// Lambda phi (w) = phi(w+) + phi(w-). The result is a list h followed by a
/// second copy of h.
SumOfSigns link(const SumOfSigns& phi);
/// phi - Lambda phi.
SumOfSigns dual(const SumOfSigns& phi);
/// One copy of the duplicated list produced by link.
SumOfSigns half_link(const SumOfSigns& phi);

struct OneSidedLimits {
  SumOfSigns plus;   // w -> lim_{t -> 0+} gamma(w, t)
  SumOfSigns minus;  // w -> lim_{t -> 0-} gamma(w, t)
  SumOfSigns half;   // (plus - minus) / 2
};
/// gamma is a list of polynomials in (w, t), variable 0 = w, variable 1 = t.
OneSidedLimits one_sided_limits(const std::vector<QPolynomial>& gamma);

struct Specialization {
  SumOfSigns plus;       // integral of phi over the positive Milnor fibre of f
  SumOfSigns minus;      // same for -f
  SumOfSigns half_diff;  // (plus - minus) / 2
};
Specialization specialize(const SumOfSigns& phi, const QPoly& f);

/// Integral with respect to the Euler characteristic; compact support required.
int euler_integral(const SumOfSigns& phi);

/// y -> sum over f(x) = y of phi(x).
StepFunction pushforward(const SumOfSigns& phi, const QPoly& f);

StepFunction to_step_function(const SumOfSigns& phi);

/// Sum-of-signs representation of a step function whose interval values share
/// one parity. Irrational breakpoints are supported when the jump data and the
/// point data have uniform parity over the real roots of their defining
/// polynomial; otherwise IrrationalExceptionalPoint.
SumOfSigns from_step_function(const StepFunction& s);

struct Mod4Invariant {
  int mu = 0;                // in 0..3
  QPoly g;                   // product of the listed polynomials
  std::vector<QPoly> sigma;  // squarefree parts of the nonconstant factors
};
/// phi(w) = mu + sgn g(w) (mod 4) wherever g(w) != 0.
Mod4Invariant mod4_invariant(const SumOfSigns& phi);

/// Distinct real roots of all listed polynomials, ascending. Each root carries
/// its element of the gcd-based coprime base of the list, so roots of a listed
/// factor are never grouped with roots of its cofactor.
std::vector<AlgebraicPoint> breakpoints_of(const std::vector<QPoly>& polys);
/// One rational strictly inside each open cell cut out by the ascending
/// points (size + 1 values); intervals are refined in place when needed.
std::vector<Rational> cell_samples(std::vector<AlgebraicPoint>& points);

/// The indicator of {sigma} for rational sigma: [1, -(w - sigma)^2].
SumOfSigns point_indicator(const Rational& sigma);

std::string to_string(const SumOfSigns& phi, const std::string& var);

}  // namespace algcon
