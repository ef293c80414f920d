#include "algcon/cfun.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "algcon/charpoly.hpp"
#include "algcon/degree.hpp"

namespace algcon {

namespace {

const QPoly kOne(Rational(1));
const QPoly kW = QPoly::x();

QPoly linear(const Rational& root) { return kW - QPoly(root); }

Rational floor_rational(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

// lcm of the squarefree parts, monic.
QPoly squarefree_lcm(const std::vector<QPoly>& polys) {
  QPoly r = kOne;
  for (const auto& g : polys) {
    if (g.degree() <= 0) continue;
    QPoly s = squarefree_part(g);
    r = r * exact_quotient(s, gcd(r, s));
  }
  return monic(r);
}

void check_point(const AlgebraicPoint& a) {
  if (a.is_rational()) {
    if (!a.poly.is_zero_poly() && !is_zero(a.poly(a.lo)))
      throw Error("cfun", Condition::kPrecondition, "rational point is not a root of its polynomial");
    return;
  }
  if (a.poly.degree() <= 0) throw Error("cfun", Condition::kPrecondition, "algebraic point needs a nonconstant polynomial");
  if (gcd(a.poly, a.poly.derivative()).degree() > 0)
    throw Error("cfun", Condition::kPrecondition, "defining polynomial must be squarefree");
  if (!(a.lo < a.hi)) throw Error("cfun", Condition::kPrecondition, "empty isolating interval");
  if (is_zero(a.poly(a.lo)) || is_zero(a.poly(a.hi)) || count_roots(a.poly, a.lo, a.hi) != 1)
    throw Error("cfun", Condition::kPrecondition, "interval does not isolate exactly one root");
}

// Polynomial whose sign at every real root r of p is s[i] (i = index of r among
// the ascending roots), built from rational separators.
QPoly sign_pattern(std::vector<AlgebraicPoint> roots, const std::vector<int>& s) {
  std::vector<Rational> cuts = cell_samples(roots);
  QPoly c(Rational(s.back()));
  for (std::size_t i = 0; i + 1 < roots.size(); ++i)
    if (s[i] != s[i + 1]) c = c * linear(cuts[i + 1]);
  // The factors (w - cut) for cuts right of root i are negative there; fix the
  // sign from the right end.
  std::vector<int> got(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) got[i] = sign_at(c, roots[i]);
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (got[i] != s[i]) throw std::logic_error("sign_pattern: construction failed");
  return c;
}

// Pairwise coprime squarefree polynomials with the same roots as the input.
std::vector<QPoly> coprime_base(const std::vector<QPoly>& polys) {
  std::vector<QPoly> base;
  for (const auto& g0 : polys) {
    if (g0.degree() <= 0) continue;
    QPoly g = squarefree_part(g0);
    std::vector<QPoly> next;
    for (const auto& b : base) {
      QPoly d = gcd(b, g);
      if (d.degree() <= 0) {
        next.push_back(b);
        continue;
      }
      QPoly rest = exact_quotient(b, d);
      if (rest.degree() > 0) next.push_back(monic(rest));
      next.push_back(d);
      g = exact_quotient(g, d);
    }
    if (g.degree() > 0) next.push_back(monic(g));
    base = std::move(next);
  }
  return base;
}

}  // namespace

SumOfSigns::SumOfSigns(std::vector<QPoly> p) : polys(std::move(p)) {
  for (const auto& g : polys)
    if (g.is_zero_poly()) throw Error("cfun", Condition::kPrecondition, "zero polynomial in a sum of signs");
}

std::vector<AlgebraicPoint> breakpoints_of(const std::vector<QPoly>& polys) {
  std::vector<AlgebraicPoint> out;
  for (const QPoly& b : coprime_base(polys))
    for (AlgebraicPoint& r : isolate_roots(b)) out.push_back(std::move(r));
  std::sort(out.begin(), out.end(), [](const AlgebraicPoint& a, const AlgebraicPoint& b) { return compare(a, b) < 0; });
  return out;
}

std::vector<Rational> cell_samples(std::vector<AlgebraicPoint>& pts) {
  if (pts.empty()) return {Rational(0)};
  std::vector<Rational> out;
  out.push_back(floor_rational(pts.front().lo) - 1);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    while (!(pts[i].hi < pts[i + 1].lo)) {
      if (!pts[i].is_rational()) pts[i] = refine(pts[i], (pts[i].hi - pts[i].lo) / 2);
      if (!pts[i + 1].is_rational()) pts[i + 1] = refine(pts[i + 1], (pts[i + 1].hi - pts[i + 1].lo) / 2);
    }
    out.push_back(simplest_between(pts[i].hi, pts[i + 1].lo));
  }
  out.push_back(floor_rational(pts.back().hi) + 1);
  return out;
}

int StepFunction::value_at(const Rational& w) const {
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    const int c = compare(breakpoints[i], w);
    if (c == 0) return point_values[i];
    if (c > 0) return interval_values[i];
  }
  return interval_values.back();
}

int StepFunction::value_at(const AlgebraicPoint& w) const {
  if (w.is_rational()) return value_at(w.lo);
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    const int c = compare(breakpoints[i], w);
    if (c == 0) return point_values[i];
    if (c > 0) return interval_values[i];
  }
  return interval_values.back();
}

int evaluate(const SumOfSigns& phi, const Rational& w) {
  int s = 0;
  for (const auto& g : phi.polys) s += sgn(g(w));
  return s;
}

int evaluate_at_algebraic(const SumOfSigns& phi, const AlgebraicPoint& sigma) {
  check_point(sigma);
  if (sigma.is_rational()) return evaluate(phi, sigma.lo);
  int s = 0;
  for (const auto& g : phi.polys) s += sign_at(g, sigma);
  return s;
}

SumOfSigns add(const SumOfSigns& a, const SumOfSigns& b) {
  SumOfSigns r = a;
  r.polys.insert(r.polys.end(), b.polys.begin(), b.polys.end());
  return r;
}

SumOfSigns negate(const SumOfSigns& a) {
  SumOfSigns r;
  for (const auto& g : a.polys) r.polys.push_back(-g);
  return r;
}

SumOfSigns multiply(const SumOfSigns& a, const SumOfSigns& b) {
  SumOfSigns r;
  for (const auto& g : a.polys)
    for (const auto& h : b.polys) r.polys.push_back(g * h);
  return r;
}

SumOfSigns times(const SumOfSigns& a, int n) {
  SumOfSigns unit = n < 0 ? negate(a) : a;
  SumOfSigns r;
  for (int i = 0; i < std::abs(n); ++i) r = add(r, unit);
  return r;
}

SumOfSigns canonicalize(const SumOfSigns& a) {
  std::vector<QPoly> reduced;
  for (const auto& g : a.polys) {
    SquarefreeDecomposition d = squarefree_decomposition(g);
    QPoly r(Rational(sgn(d.unit)));
    for (const auto& [p, m] : d.factors) r = r * (m % 2 == 1 ? p : p * p);
    reduced.push_back(r);
  }
  std::vector<bool> gone(reduced.size(), false);
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    if (gone[i]) continue;
    for (std::size_t j = i + 1; j < reduced.size(); ++j) {
      if (!gone[j] && reduced[j] == -reduced[i]) {
        gone[i] = gone[j] = true;
        break;
      }
    }
  }
  SumOfSigns out;
  for (std::size_t i = 0; i < reduced.size(); ++i)
    if (!gone[i]) out.polys.push_back(reduced[i]);
  return out;
}

StepFunction to_step_function(const SumOfSigns& phi) {
  StepFunction s;
  s.breakpoints = breakpoints_of(phi.polys);
  std::vector<Rational> samples = cell_samples(s.breakpoints);
  for (const auto& x : samples) s.interval_values.push_back(evaluate(phi, x));
  for (const auto& b : s.breakpoints) s.point_values.push_back(evaluate_at_algebraic(phi, b));
  return s;
}

bool equals(const SumOfSigns& a, const SumOfSigns& b) {
  return equals(to_step_function(b), a);
}

bool equals(const StepFunction& s, const SumOfSigns& a) {
  std::vector<QPoly> polys = a.polys;
  for (const auto& b : s.breakpoints) polys.push_back(b.is_rational() ? linear(b.lo) : b.poly);
  std::vector<AlgebraicPoint> pts = breakpoints_of(polys);
  std::vector<Rational> samples = cell_samples(pts);
  for (const auto& x : samples)
    if (evaluate(a, x) != s.value_at(x)) return false;
  for (const auto& p : pts)
    if (evaluate_at_algebraic(a, p) != s.value_at(p)) return false;
  return true;
}

SumOfSigns half_link(const SumOfSigns& phi) {
  SumOfSigns link_full = link(phi);
  const std::size_t h = link_full.size() / 2;
  SumOfSigns out;
  for (std::size_t i = 0; i < h; ++i) {
    if (link_full.polys[i] != link_full.polys[h + i]) throw std::logic_error("half_link: link output is not duplicated");
    out.polys.push_back(link_full.polys[i]);
  }
  return out;
}

SumOfSigns link(const SumOfSigns& phi) {
  // phi(w+) + phi(w-) is 2 sgn g(w) except at roots of even multiplicity,
  // where both limits equal sgn of the cofactor.
  SumOfSigns half;
  for (const auto& g : phi.polys) {
    half.polys.push_back(g);
    SquarefreeDecomposition d = squarefree_decomposition(g);
    for (const auto& [p, m] : d.factors) {
      if (m % 2 != 0) continue;
      QPoly c = exact_quotient(g, pow(p, static_cast<unsigned>(m)));
      half.polys.push_back(c);
      half.polys.push_back(-(c * p * p));
    }
  }
  return add(half, half);
}

SumOfSigns dual(const SumOfSigns& phi) { return add(phi, negate(link(phi))); }

OneSidedLimits one_sided_limits(const std::vector<QPolynomial>& gamma) {
  OneSidedLimits out;
  for (const auto& g : gamma) {
    if (g.nvars() != 2) throw Error("cfun", Condition::kPrecondition, "one_sided_limits needs polynomials in (w, t)");
    if (g.is_zero_poly()) throw Error("cfun", Condition::kPrecondition, "zero polynomial in gamma");
    std::map<int, std::vector<Rational>> by_t;
    for (const auto& [e, c] : g.terms()) {
      auto& v = by_t[e[1]];
      if (v.size() <= static_cast<std::size_t>(e[0])) v.resize(static_cast<std::size_t>(e[0]) + 1, Rational(0));
      v[static_cast<std::size_t>(e[0])] = c;
    }
    const int k = by_t.begin()->first;
    const int top = by_t.rbegin()->first;
    std::vector<QPoly> coeff;  // coefficient of t^(k + j)
    for (int j = k; j <= top; ++j) {
      auto it = by_t.find(j);
      coeff.push_back(it == by_t.end() ? QPoly() : QPoly(it->second));
    }
    const QPoly& c0 = coeff[0];
    out.plus.polys.push_back(c0);
    out.minus.polys.push_back(k % 2 == 0 ? c0 : -c0);
    if (k % 2 == 1) out.half.polys.push_back(c0);
    // At roots of c0 the limit is the sign of the first coefficient that does
    // not vanish there: split the roots by gcds.
    QPoly rest = c0.degree() > 0 ? squarefree_part(c0) : kOne;
    for (std::size_t j = 1; j < coeff.size() && rest.degree() > 0; ++j) {
      const QPoly& cj = coeff[j];
      QPoly common = cj.is_zero_poly() ? rest : gcd(rest, cj);
      QPoly here = exact_quotient(rest, common);
      if (here.degree() > 0) {
        std::vector<QPoly> gadget{cj, -(cj * here * here)};
        const bool odd = (k + static_cast<int>(j)) % 2 == 1;
        for (const auto& p : gadget) {
          out.plus.polys.push_back(p);
          out.minus.polys.push_back(odd ? -p : p);
          if (odd) out.half.polys.push_back(p);
        }
      }
      rest = common;
    }
  }
  return out;
}

Specialization specialize(const SumOfSigns& phi, const QPoly& f) {
  if (f.is_zero_poly()) throw Error("cfun", Condition::kPrecondition, "specialize needs a nonzero f");
  // gamma(w, t) = phi(w + t)
  std::vector<QPolynomial> gamma;
  const QPolynomial w = QPolynomial::variable(2, 0), t = QPolynomial::variable(2, 1);
  for (const auto& g : phi.polys) {
    QPolynomial acc(2);
    for (std::size_t i = g.coeffs().size(); i-- > 0;) acc = acc * (w + t) + QPolynomial(2, g.coeffs()[i]);
    gamma.push_back(acc);
  }
  const OneSidedLimits lim = one_sided_limits(gamma);
  const SumOfSigns hl = half_link(phi);
  Specialization out;
  SquarefreeDecomposition d = squarefree_decomposition(f);
  for (const auto& [p, m] : d.factors) {
    const QPoly c = exact_quotient(f, pow(p, static_cast<unsigned>(m)));
    const SumOfSigns on_p({kOne, -(p * p)});
    const SumOfSigns signed_on_p({c, -(c * p * p)});
    if (m % 2 == 1) {
      // f is increasing at a root of p exactly when c p' > 0 there.
      const QPoly slope = c * p.derivative();
      const SumOfSigns odd_part = multiply(SumOfSigns({slope, -(slope * p * p)}), lim.half);
      out.plus = add(out.plus, add(multiply(on_p, hl), odd_part));
      out.minus = add(out.minus, add(multiply(on_p, hl), negate(odd_part)));
      out.half_diff = add(out.half_diff, odd_part);
    } else {
      out.plus = add(out.plus, multiply(add(on_p, signed_on_p), hl));
      out.minus = add(out.minus, multiply(add(on_p, negate(signed_on_p)), hl));
      out.half_diff = add(out.half_diff, multiply(signed_on_p, hl));
    }
  }
  return out;
}

int euler_integral(const SumOfSigns& phi) {
  StepFunction s = to_step_function(phi);
  if (s.interval_values.front() != 0 || s.interval_values.back() != 0)
    throw Error("cfun", Condition::kNonCompactSupport, "function does not vanish near -infinity and +infinity");
  int total = 0;
  for (int v : s.point_values) total += v;
  for (std::size_t i = 1; i + 1 < s.interval_values.size(); ++i) total -= s.interval_values[i];
  return total;
}

namespace {

// Polynomial whose roots are f(x) over the complex roots x of p.
QPoly image_polynomial(const QPoly& f, const QPoly& p) {
  const int n = p.degree();
  if (n <= 0) return kOne;
  Matrix<Rational> m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  QPoly col = f % p;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col.coeff(i);
    col = (col * kW) % p;
  }
  return char_poly_rational(m);
}

int fibre_sum(const SumOfSigns& phi, const std::vector<AlgebraicPoint>& xs) {
  int s = 0;
  for (const auto& x : xs) s += evaluate_at_algebraic(phi, x);
  return s;
}

}  // namespace

StepFunction pushforward(const SumOfSigns& phi, const QPoly& f) {
  if (f.degree() <= 0) throw Error("cfun", Condition::kPrecondition, "pushforward along a constant polynomial");
  std::vector<QPoly> targets;
  QPoly crit = squarefree_part(f.derivative());
  if (crit.degree() > 0) targets.push_back(image_polynomial(f, crit));
  QPoly brk = squarefree_lcm(phi.polys);
  if (brk.degree() > 0) targets.push_back(image_polynomial(f, brk));
  StepFunction s;
  s.breakpoints = breakpoints_of(targets);
  std::vector<Rational> samples = cell_samples(s.breakpoints);
  for (const auto& y : samples) s.interval_values.push_back(fibre_sum(phi, isolate_roots(f - QPoly(y))));
  for (const auto& b : s.breakpoints) {
    std::vector<AlgebraicPoint> fibre;
    if (b.is_rational()) {
      fibre = isolate_roots(f - QPoly(b.lo));
    } else {
      // Roots x of b.poly(f(x)) with f(x) inside the isolating interval of b.
      for (const auto& x : isolate_roots(compose(b.poly, f)))
        if (sign_at(f - QPoly(b.lo), x) > 0 && sign_at(f - QPoly(b.hi), x) < 0) fibre.push_back(x);
    }
    s.point_values.push_back(fibre_sum(phi, fibre));
  }
  return s;
}

SumOfSigns point_indicator(const Rational& sigma) {
  const QPoly l = linear(sigma);
  return SumOfSigns({kOne, -(l * l)});
}

SumOfSigns from_step_function(const StepFunction& s) {
  const std::size_t nb = s.breakpoints.size();
  if (s.interval_values.size() != nb + 1 || s.point_values.size() != nb)
    throw Error("cfun", Condition::kPrecondition, "step function value lists have the wrong lengths");
  for (const auto& b : s.breakpoints) check_point(b);
  for (std::size_t i = 0; i + 1 < nb; ++i)
    if (compare(s.breakpoints[i], s.breakpoints[i + 1]) >= 0)
      throw Error("cfun", Condition::kPrecondition, "breakpoints must be strictly increasing");
  for (int v : s.interval_values)
    if ((v - s.interval_values.front()) % 2 != 0)
      throw Error("cfun", Condition::kNotRepresentable,
                  "interval values do not share one parity, so the function is not generically constant mod 2");

  SumOfSigns out;
  // Irrational breakpoints: jumps through sgn(c p) layers, point values
  // through 1_{p=0} sgn(c) layers, for each coprime defining polynomial p.
  std::vector<QPoly> irr_polys;
  for (const auto& b : s.breakpoints)
    if (!b.is_rational()) irr_polys.push_back(b.poly);
  for (const QPoly& p : coprime_base(irr_polys)) {
    std::vector<AlgebraicPoint> roots = isolate_roots(p);
    std::vector<int> jump(roots.size()), excess(roots.size());
    bool any_irrational = false;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (roots[i].is_rational()) continue;
      any_irrational = true;
      // Samples of p's own cells may straddle other breakpoints; evaluate the
      // limits just beside the root instead.
      AlgebraicPoint r = roots[i];
      for (;;) {
        bool clean = true;
        for (const auto& b : s.breakpoints) {
          if (compare(b, r) == 0) continue;
          if (compare(b, r.lo) >= 0 && compare(b, r.hi) <= 0) clean = false;
        }
        if (clean) break;
        r = refine(r, (r.hi - r.lo) / 2);
      }
      roots[i] = r;
      const int left = s.value_at(r.lo), right = s.value_at(r.hi);
      jump[i] = right - left;
      excess[i] = s.value_at(r) - (left + right) / 2;
    }
    if (!any_irrational) continue;
    auto layers = [&](const std::vector<int>& want, auto emit) {
      int L = 0, parity = -1;
      for (std::size_t i = 0; i < roots.size(); ++i) {
        if (roots[i].is_rational()) continue;
        const int par = ((want[i] % 2) + 2) % 2;
        if (parity >= 0 && par != parity)
          throw Error("cfun", Condition::kIrrationalExceptionalPoint,
                      "data at the irrational roots of " + to_string(p, "w") +
                          " is not uniform mod 2, so no rational sum of signs reproduces it");
        parity = par;
        L = std::max(L, std::abs(want[i]));
      }
      if (L % 2 != parity) ++L;
      for (int l = 0; l < L; ++l) {
        std::vector<int> sign(roots.size());
        for (std::size_t i = 0; i < roots.size(); ++i) {
          const int pos = roots[i].is_rational() ? L : (L + want[i]) / 2;
          sign[i] = l < pos ? 1 : -1;
        }
        emit(sign);
      }
    };
    std::vector<int> half_jump(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) half_jump[i] = jump[i] / 2;
    const QPoly dp = p.derivative();
    layers(half_jump, [&](std::vector<int> sign) {
      for (std::size_t i = 0; i < roots.size(); ++i) sign[i] *= sign_at(dp, roots[i]);
      out.polys.push_back(sign_pattern(roots, sign) * p);
    });
    layers(excess, [&](const std::vector<int>& sign) {
      const QPoly c = sign_pattern(roots, sign);
      out.polys.push_back(c);
      out.polys.push_back(-(c * p * p));
    });
  }

  // Rational part: the residual has jumps and point values at rational points only.
  StepFunction built = to_step_function(out);
  std::vector<QPoly> all;
  for (const auto& b : s.breakpoints) all.push_back(b.is_rational() ? linear(b.lo) : b.poly);
  for (const auto& b : built.breakpoints) all.push_back(b.is_rational() ? linear(b.lo) : b.poly);
  std::vector<AlgebraicPoint> pts = breakpoints_of(all);
  std::vector<Rational> samples = cell_samples(pts);
  auto residual = [&](const Rational& x) { return s.value_at(x) - built.value_at(x); };
  const int v0 = residual(samples.front());
  int constant = v0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const int left = residual(samples[i]), right = residual(samples[i + 1]);
    const int here = s.value_at(pts[i]) - built.value_at(pts[i]);
    if (!pts[i].is_rational()) {
      if (left != right || here != left)
        throw std::logic_error("from_step_function: irrational residual did not vanish");
      continue;
    }
    const int step = (right - left) / 2;
    const QPoly l = linear(pts[i].lo);
    for (int k = 0; k < std::abs(step); ++k) out.polys.push_back(step > 0 ? l : -l);
    constant += step;
    const int fix = here - (left + right) / 2;
    out = add(out, times(point_indicator(pts[i].lo), fix));
  }
  for (int k = 0; k < std::abs(constant); ++k) out.polys.push_back(QPoly(Rational(constant > 0 ? 1 : -1)));
  if (!equals(s, out)) throw std::logic_error("from_step_function: verification failed");
  return out;
}

Mod4Invariant mod4_invariant(const SumOfSigns& phi) {
  Mod4Invariant r;
  r.g = kOne;
  for (const auto& g : phi.polys) {
    if (g.is_zero_poly()) throw Error("cfun", Condition::kPrecondition, "zero polynomial in a sum of signs");
    r.g = r.g * g;
    if (g.degree() > 0) r.sigma.push_back(squarefree_part(g));
  }
  r.mu = ((static_cast<int>(phi.size()) - 1) % 4 + 4) % 4;
  return r;
}

std::string to_string(const SumOfSigns& phi, const std::string& var) {
  std::string s = "[";
  for (std::size_t i = 0; i < phi.polys.size(); ++i) {
    if (i) s += ", ";
    s += to_string(phi.polys[i], var);
  }
  return s + "]";
}

}  // namespace algcon
