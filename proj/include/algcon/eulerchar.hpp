#pragma once

#include <optional>
#include <vector>

#include "algcon/degree.hpp"

namespace algcon {

struct ChiOptions {
  DegreeOptions degree;
  std::optional<int> forced_k;  // exponent of the small-sphere perturbation
  int k_steps = 6;              // stabilization window when k is not forced
};

/// chi({x : f(x, 1) = 0}) = 1 - deg_0 grad(f - t^(2d+1)) for f homogeneous of
/// degree 2d in (x, t) (t is the last variable) with f(x, 0) = ||x||^(2d) and
/// f >= 0 (sampled, not decided).
int chi_from_homogeneous(const QPolynomial& f, int d, const ChiOptions& opt = {});

struct Compactification {
  QPolynomial f;  // variables (y_1..y_n, y_{n+1}, t), homogeneous of degree 4p
  int p = 0;
};

/// Algebraic one-point compactification: h = y_{n+1}^2 sum f_i^2 + (y_{n+1} - 1)^2,
/// H = ||y'||^(4p) h(y'/||y'||^2), f = homogenization of H to degree 4p.
Compactification compactify(const std::vector<QPolynomial>& gens, std::size_t nvars);

enum class CompactChiMethod {
  kConeHalving,      // 1 + (chi(L_Z) - chi(E)) / 2 through cone links (default)
  kCompactification  // chi_from_homogeneous(compactify(X)); feasible for tiny inputs only
};

/// chi(X~) of the one-point compactification.
int chi_compactified(const std::vector<QPolynomial>& gens, std::size_t nvars, const ChiOptions& opt = {},
                     CompactChiMethod method = CompactChiMethod::kConeHalving);

/// chi_c(X), the Euler characteristic with compact supports.
int chi_compact_support(const std::vector<QPolynomial>& gens, std::size_t nvars, const ChiOptions& opt = {});

/// chi(X cap S_r) for small r; every generator must vanish at the origin.
int link_at_origin(const std::vector<QPolynomial>& gens, std::size_t nvars, const ChiOptions& opt = {});

/// chi(X cap S_R) for large R, via inversion and link_at_origin.
int link_at_infinity(const std::vector<QPolynomial>& gens, std::size_t nvars, const ChiOptions& opt = {});

/// chi(X) = chi(X~) + chi(S) - 1.
int chi_affine(const std::vector<QPolynomial>& gens, std::size_t nvars, const ChiOptions& opt = {});

/// chi(S_eps cap {g <= 0}) = 1 - deg_0 grad g.
int chi_milnor_halfset(const QPolynomial& g, const ChiOptions& opt = {});

/// chi(S_eps cap {h <= 0}) for any h (also when h(0) != 0 or h = 0), through
/// the perturbation h - sum y_i^(2k).
int halfset_chi(const QPolynomial& h, const ChiOptions& opt = {});

/// The single defining function used by the link formulas: the generator
/// itself when there is one, else the sum of squares. Zero for no generators.
/// `nonnegative` reports whether {h >= 0} is everything.
QPolynomial defining_function(const std::vector<QPolynomial>& gens, std::size_t nvars, bool& nonnegative);

/// sum y_i^(2k)
QPolynomial power_sum(std::size_t nvars, int k);

/// 1 + (-1)^(m-1), the Euler characteristic of the unit sphere in R^m.
int sphere_chi(std::size_t m);

}  // namespace algcon
