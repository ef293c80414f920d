#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "algcon/polynomial.hpp"
#include "algcon/ratfunc.hpp"

namespace algcon {

/// p, p', then successive negated remainders; the last entry is nonzero.
struct SturmChain {
  std::vector<QPoly> seq;
};

/// A real algebraic number: a root of the squarefree `poly` that is the only
/// root in the open interval (lo, hi). Rational roots are stored exactly with
/// lo == hi == the root.
struct AlgebraicPoint {
  QPoly poly;
  Rational lo;
  Rational hi;

  bool is_rational() const { return lo == hi; }
  /// Midpoint of the isolating interval as a double, for display only.
  double approx() const;
};

SturmChain sturm_chain(const QPoly& p);
/// Generalized chain a, b, -rem(a, b), ...
SturmChain sturm_sequence(const QPoly& a, const QPoly& b);

/// Sign variations of the chain at x (zeros dropped).
int sign_variations(const SturmChain& c, const Rational& x);
int sign_variations_at_infinity(const SturmChain& c, bool positive);

/// 1 + max |a_i / a_n|: every real root lies strictly inside (-B, B).
Rational cauchy_bound(const QPoly& p);

/// Distinct real roots in the open interval (lo, hi); nullopt means infinite.
/// Roots at the endpoints are excluded.
int count_roots(const QPoly& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi);

/// Disjoint isolating intervals, ascending, for the real roots of p's
/// squarefree part.
std::vector<AlgebraicPoint> isolate_roots(const QPoly& p);

/// Sum over the real roots x of q of sgn p(x). q must be squarefree.
int tarski_query(const QPoly& p, const QPoly& q);

/// Sign of g at the algebraic point.
int sign_at(const QPoly& g, const AlgebraicPoint& a);

/// Shrinks the isolating interval of an irrational point below the given width.
AlgebraicPoint refine(const AlgebraicPoint& a, const Rational& width);

/// Orders an algebraic point against a rational: -1, 0, 1 for a < x, a = x, a > x.
int compare(const AlgebraicPoint& a, const Rational& x);
/// Orders two algebraic points.
int compare(const AlgebraicPoint& a, const AlgebraicPoint& b);

struct SquarefreeDecomposition {
  Rational unit;
  std::vector<std::pair<QPoly, int>> factors;  // monic, pairwise coprime, ascending multiplicity
};
SquarefreeDecomposition squarefree_decomposition(const QPoly& g);

/// Univariate view of a polynomial that involves at most variable `var`.
QPoly to_unipoly(const QPolynomial& p, std::size_t var);
QPolynomial from_unipoly(const QPoly& p, std::size_t nvars, std::size_t var);

/// Winding number of (F1, F2) around the circle of the given radius, exact:
/// the circle is traversed through its rational parametrization and sign
/// changes are located by root isolation. Throws WindingUncertified when F
/// vanishes on the circle.
int winding_number(const std::vector<QPolynomial>& F, const Rational& radius);

/// deg_0 of a planar germ: winding numbers on circles of radius 2^-j,
/// j = first_j, first_j + 1, ..., until `agree` consecutive radii give the
/// same value. Circles meeting the zero set break the run. Stray zeros of F
/// near the origin shift the count on the larger circles, hence the run.
int winding_degree(const std::vector<QPolynomial>& F, int first_j = 2, int max_j = 30, int agree = 4);

/// Distinct real roots of f(w0, y) for f in variables (w, y); nullopt when the
/// fibre polynomial vanishes identically (the fibre is the whole line).
std::optional<int> fiber_root_count(const QPolynomial& f, const Rational& w0);

}  // namespace algcon
