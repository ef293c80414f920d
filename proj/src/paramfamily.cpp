#include "algcon/paramfamily.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace algcon {

namespace {

void add_sigma(std::vector<QPoly>& out, const QPoly& p) {
  if (p.degree() <= 0) return;
  QPoly s = monic(squarefree_part(p));
  if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
}

void add_sigma(std::vector<QPoly>& out, const RatFunc& f) {
  add_sigma(out, f.num());
  add_sigma(out, f.den());
}

const SumOfSigns& one() {
  static const SumOfSigns s({QPoly(Rational(1))});
  return s;
}

SumOfSigns constant(int n) { return times(one(), n); }

QPoly lcm(const QPoly& a, const QPoly& b) { return monic(exact_quotient(a * b, gcd(a, b))); }

struct Generic {
  SumOfSigns value;
  std::vector<QPoly> sigma;
};

// Generic degree off the exceptional set: the Descartes count on the
// characteristic coefficients of T(w).
Generic generic_degree(const FamilyMap& F, const QuotientOptions& qopt) {
  GenericSignatureData d = parametric_signature(F, qopt);
  Generic g;
  g.sigma = d.sigma_polys;
  if (d.T.empty()) return g;
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < d.charpoly_coeffs.size(); ++i)
    if (!d.charpoly_coeffs[i].is_zero_poly()) nz.push_back(i);
  if (nz.empty() || nz.front() != 0)
    throw Error("paramfamily", Condition::kDegenerateForm, "generic bilinear form is singular");
  for (std::size_t i = 1; i < nz.size(); ++i)
    if ((nz[i - 1] + nz[i]) % 2 == 1)
      g.value.polys.push_back(-(d.charpoly_coeffs[nz[i - 1]] * d.charpoly_coeffs[nz[i]]));
  return g;
}

// Generic part valid off the roots of sigma, corrected at each rational root
// by the exact pointwise value.
FamilyResult patch(const SumOfSigns& generic, const std::vector<QPoly>& sigma,
                   const std::function<int(const Rational&)>& pointwise) {
  FamilyResult r;
  r.generic = canonicalize(generic);
  for (const auto& p : sigma) add_sigma(r.sigma_polys, p);
  QPoly P(Rational(1));
  std::vector<Rational> points;
  for (const auto& pt : breakpoints_of(r.sigma_polys)) {
    if (pt.is_rational()) {
      points.push_back(pt.lo);
      P = P * QPoly({-pt.lo, Rational(1)});
    } else {
      r.unresolved.push_back(pt);
    }
  }
  SumOfSigns value;
  for (const auto& q : r.generic.polys) value.polys.push_back(q * P * P);
  for (const auto& s : points) value = add(value, times(point_indicator(s), pointwise(s)));
  r.value = canonicalize(value);
  return r;
}

bool listed(const AlgebraicPoint& p, const std::vector<AlgebraicPoint>& list) {
  for (const auto& u : list)
    if (compare(u, p) == 0) return true;
  return false;
}

FamilyResult combine(const FamilyResult& a, const FamilyResult& b, int sign_b) {
  FamilyResult r;
  r.value = canonicalize(add(a.value, times(b.value, sign_b)));
  r.generic = canonicalize(add(a.generic, times(b.generic, sign_b)));
  r.sigma_polys = a.sigma_polys;
  for (const auto& p : b.sigma_polys) add_sigma(r.sigma_polys, p);
  r.unresolved = a.unresolved;
  for (const auto& pt : b.unresolved)
    if (!listed(pt, r.unresolved)) r.unresolved.push_back(pt);
  if (a.k || b.k) r.k = std::max(a.k.value_or(0), b.k.value_or(0));
  return r;
}

FamilyResult constant_result(int n) {
  FamilyResult r;
  r.value = canonicalize(constant(n));
  r.generic = r.value;
  return r;
}

FamilyPolynomial lift(const QPolynomial& p) {
  return p.map_coefficients([](const Rational& c) { return RatFunc(c); });
}

FamilyPolynomial top_form(const FamilyPolynomial& h) {
  FamilyPolynomial r(h.nvars());
  const int d = h.degree();
  for (const auto& [e, c] : h.terms())
    if (e.degree() == d) r.add_term(e, c);
  return r;
}

ChiOptions chi_options(const FamilyOptions& opt) {
  ChiOptions c;
  c.degree = opt.degree;
  return c;
}

FamilyPolynomial defining_function(const FamilyMap& gens, std::size_t nvars, bool& nonnegative) {
  nonnegative = gens.size() != 1;
  if (gens.empty()) return FamilyPolynomial(nvars);
  if (gens.size() == 1) return gens.front();
  return sum_of_squares(gens);
}

FamilyResult link_family(const FamilyPolynomial& h, bool nonnegative, const FamilyOptions& opt) {
  const int sphere = sphere_chi(h.nvars());
  FamilyResult r = halfset_family(h, opt);
  r = combine(r, nonnegative ? constant_result(sphere) : halfset_family(-h, opt), 1);
  return combine(r, constant_result(sphere), -1);
}

// doubled / 2 + rest as a step function. Point values at unresolved points are
// taken from the left cell, since they are only known generically there.
// The exceptional polynomials only refine the breakpoint labels: a point that is
// not a jump gets equal values on both sides.
StepFunction half_plus(const SumOfSigns& doubled, const SumOfSigns& rest, const std::vector<QPoly>& sigma,
                       const std::vector<AlgebraicPoint>& unresolved) {
  std::vector<QPoly> polys = doubled.polys;
  polys.insert(polys.end(), rest.polys.begin(), rest.polys.end());
  polys.insert(polys.end(), sigma.begin(), sigma.end());
  StepFunction s;
  s.breakpoints = breakpoints_of(polys);
  const std::vector<Rational> cells = cell_samples(s.breakpoints);
  auto half = [](int v, const char* where) {
    if (v % 2 != 0) throw std::logic_error(std::string("chi_family: odd doubled value on ") + where);
    return v / 2;
  };
  for (const Rational& c : cells) s.interval_values.push_back(half(evaluate(doubled, c), "a cell") + evaluate(rest, c));
  for (std::size_t i = 0; i < s.breakpoints.size(); ++i) {
    const AlgebraicPoint& b = s.breakpoints[i];
    if (listed(b, unresolved)) {
      s.point_values.push_back(s.interval_values[i]);
      continue;
    }
    s.point_values.push_back(half(evaluate_at_algebraic(doubled, b), "an exceptional point") +
                             evaluate_at_algebraic(rest, b));
  }
  return s;
}

}  // namespace

FamilyPolynomial to_family(const QPolynomial& f) {
  if (f.nvars() < 1) throw Error("paramfamily", Condition::kPrecondition, "family needs the parameter variable");
  const std::size_t n = f.nvars() - 1;
  FamilyPolynomial out(n);
  for (const auto& [e, c] : f.terms()) {
    std::vector<int> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = e[i + 1];
    std::vector<Rational> coeffs(static_cast<std::size_t>(e[0]) + 1, Rational(0));
    coeffs.back() = c;
    out.add_term(Exponent(std::move(y)), RatFunc(QPoly(std::move(coeffs))));
  }
  return out;
}

FamilyMap to_family(const std::vector<QPolynomial>& F) {
  FamilyMap out;
  for (const auto& f : F) out.push_back(to_family(f));
  return out;
}

QPolynomial specialize_at(const FamilyPolynomial& f, const Rational& w) {
  return f.map_coefficients([&](const RatFunc& c) { return c.evaluate(w); });
}

Map specialize_at(const FamilyMap& F, const Rational& w) {
  Map out;
  for (const auto& f : F) out.push_back(specialize_at(f, w));
  return out;
}

GenericQuotient generic_quotient(const FamilyMap& F, const QuotientOptions& opt) {
  std::vector<QPoly> sigma;
  auto record = [&sigma](const RatFunc& lead) { add_sigma(sigma, lead); };
  for (const auto& f : F)
    for (const auto& [e, c] : f.terms()) add_sigma(sigma, c.den());
  QuotientAlgebra<RatFunc> q = quotient<RatFunc>(F, opt, record);
  return {std::move(q), std::move(sigma)};
}

GenericSignatureData parametric_signature(const FamilyMap& F, const QuotientOptions& opt) {
  GenericQuotient gq = generic_quotient(F, opt);
  GenericSignatureData out;
  out.staircase = gq.algebra.staircase();
  out.sigma_polys = gq.sigma_polys;
  if (gq.algebra.dimension() == 0) {
    out.charpoly_coeffs = {QPoly(Rational(1))};
    return out;
  }
  const RatFunc lambda = jacobian_socle_coefficient(F, gq.algebra);
  add_sigma(out.sigma_polys, lambda);
  const SymmetricForm<RatFunc> form = bilinear_matrix(gq.algebra, lambda);
  const std::size_t m = form.matrix.size();
  QPoly L(Rational(1));
  for (const auto& row : form.matrix)
    for (const auto& v : row) L = lcm(L, v.den());
  add_sigma(out.sigma_polys, L);
  const RatFunc L2(L * L);
  out.T.assign(m, std::vector<QPoly>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      RatFunc v = form.matrix[i][j] * L2;
      if (!v.is_polynomial()) throw std::logic_error("parametric_signature: denominator survived clearing");
      out.T[i][j] = v.num();
    }
  UniPoly<QPoly> cp = char_poly(out.T);
  for (std::size_t i = 0; i <= m; ++i) {
    out.charpoly_coeffs.push_back(cp.coeff(static_cast<int>(i)));
    add_sigma(out.sigma_polys, out.charpoly_coeffs.back());
  }
  return out;
}

FamilyResult degree_family(const FamilyMap& F, const FamilyOptions& opt) {
  if (F.empty()) throw Error("paramfamily", Condition::kPrecondition, "empty map");
  const std::size_t n = F.front().nvars();
  if (F.size() != n) throw Error("paramfamily", Condition::kPrecondition, "map must have as many components as variables");
  for (const auto& f : F)
    if (f.nvars() != n) throw Error("paramfamily", Condition::kPrecondition, "component arity mismatch");
  auto pointwise = [&](const Rational& s) { return local_degree(specialize_at(F, s), opt.degree); };
  auto run = [&](const FamilyMap& G) {
    Generic g = generic_degree(G, opt.degree.quotient);
    return patch(g.value, g.sigma, pointwise);
  };
  if (opt.forced_k) {
    FamilyResult r = run(regularize(F, *opt.forced_k));
    r.k = opt.forced_k;
    return r;
  }
  bool all_nonzero = true;
  for (const auto& f : F) all_nonzero = all_nonzero && !f.is_zero_poly();
  if (all_nonzero) {
    try {
      return run(F);
    } catch (const Error& e) {
      if (e.condition() != Condition::kNotFiniteDimensional) throw;
    }
  }
  int k0 = 2;
  for (const auto& f : F)
    if (!f.is_zero_poly()) k0 = std::max(k0, f.order() + 1);
  std::optional<FamilyResult> prev;
  for (int k = k0; k <= k0 + opt.k_steps; ++k) {
    FamilyResult r;
    try {
      r = run(regularize(F, k));
    } catch (const Error& e) {
      if (e.condition() != Condition::kNotFiniteDimensional) throw;
      prev.reset();
      continue;
    }
    r.k = k;
    if (prev && equals(prev->value, r.value)) return r;
    prev = std::move(r);
  }
  throw Error("paramfamily", Condition::kNonStabilizing,
              "regularized family degrees did not stabilize for k in [" + std::to_string(k0) + ", " +
                  std::to_string(k0 + opt.k_steps) + "]");
}

FamilyResult degree_family(const std::vector<QPolynomial>& F, const FamilyOptions& opt) {
  return degree_family(to_family(F), opt);
}

FamilyResult halfset_family(const FamilyPolynomial& h, const FamilyOptions& opt) {
  const std::size_t m = h.nvars();
  const int sphere = sphere_chi(m);
  if (h.is_zero_poly()) return constant_result(sphere);
  const ChiOptions copt = chi_options(opt);
  auto pointwise = [&](const Rational& s) { return halfset_chi(specialize_at(h, s), copt); };
  const RatFunc c = h.coeff(Exponent(m));
  if (!is_zero(c)) {
    // chi(S) where c < 0 and 0 where c > 0.
    SumOfSigns g;
    if (sphere != 0) g = times(SumOfSigns({QPoly(Rational(1)), -(c.num() * c.den())}), sphere / 2);
    std::vector<QPoly> sigma;
    add_sigma(sigma, c);
    return patch(g, sigma, pointwise);
  }
  auto at = [&](int k) {
    FamilyMap G = gradient(h - lift(power_sum(m, k)));
    Generic g = generic_degree(G, opt.degree.quotient);
    FamilyResult r = patch(add(one(), negate(g.value)), g.sigma, pointwise);
    r.k = k;
    return r;
  };
  if (opt.forced_k) return at(*opt.forced_k);
  if (h.is_homogeneous()) return at(h.degree() / 2 + 1);
  const int k0 = h.order() / 2 + 1;
  std::optional<FamilyResult> prev;
  for (int k = k0; k <= k0 + opt.k_steps; ++k) {
    FamilyResult r;
    try {
      r = at(k);
    } catch (const Error& e) {
      if (e.condition() != Condition::kNotFiniteDimensional && e.condition() != Condition::kNonStabilizing) throw;
      prev.reset();
      continue;
    }
    if (prev && equals(prev->value, r.value)) return r;
    prev = std::move(r);
  }
  throw Error("paramfamily", Condition::kNonStabilizing,
              "family half-set Euler characteristic did not stabilize for k in [" + std::to_string(k0) + ", " +
                  std::to_string(k0 + opt.k_steps) + "]");
}

FamilyResult chi_family(const std::vector<QPolynomial>& gens, std::size_t nvars, const FamilyOptions& opt) {
  if (nvars < 2) throw Error("paramfamily", Condition::kPrecondition, "need the parameter and at least one variable");
  for (const auto& g : gens)
    if (g.nvars() != nvars) throw Error("paramfamily", Condition::kPrecondition, "generator arity mismatch");
  const std::size_t n = nvars - 1;
  const FamilyMap fam = to_family(gens);

  bool nonneg = false;
  const FamilyPolynomial h = defining_function(fam, n, nonneg);
  const FamilyPolynomial cone = homogenize(h, std::max(h.degree(), 0));
  FamilyResult doubled = combine(link_family(cone, nonneg, opt), link_family(top_form(h), nonneg, opt), -1);

  FamilyMap inverted;
  for (const auto& g : fam) inverted.push_back(inversion_transform(g, std::max(g.degree(), 0)));
  bool inv_nonneg = false;
  const FamilyResult at_infinity = link_family(defining_function(inverted, n, inv_nonneg), inv_nonneg, opt);

  FamilyResult r = combine(doubled, at_infinity, 1);
  r.steps = half_plus(doubled.value, at_infinity.value, r.sigma_polys, r.unresolved);
  try {
    r.value = canonicalize(from_step_function(*r.steps));
  } catch (const Error& e) {
    if (e.condition() != Condition::kIrrationalExceptionalPoint) throw;
    r.value = SumOfSigns();
    r.symbolic = false;
  }
  r.generic = r.value;
  return r;
}

}  // namespace algcon
