#include "algcon/oracle.hpp"

#include <algorithm>
#include <string>

#include "algcon/errors.hpp"

namespace algcon {

double AlgebraicPoint::approx() const {
  Rational mid = (lo + hi) / 2;
  return mid.get_d();
}

SturmChain sturm_sequence(const QPoly& a, const QPoly& b) {
  SturmChain c;
  if (a.is_zero_poly()) return c;
  c.seq.push_back(a);
  QPoly prev = a;
  QPoly cur = b;
  while (!cur.is_zero_poly()) {
    c.seq.push_back(cur);
    QPoly r = -(prev % cur);
    prev = std::move(cur);
    cur = std::move(r);
  }
  return c;
}

SturmChain sturm_chain(const QPoly& p) { return sturm_sequence(p, p.derivative()); }

namespace {

int variations(const std::vector<int>& signs) {
  int v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

QPoly linear(const Rational& root) { return QPoly{-root, Rational(1)}; }

// Squarefree part with the given endpoint roots divided out.
QPoly strip_endpoints(const QPoly& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  QPoly q = squarefree_part(p);
  if (lo && is_zero(q(*lo))) q = exact_quotient(q, linear(*lo));
  if (hi && is_zero(q(*hi))) q = exact_quotient(q, linear(*hi));
  return q;
}

}  // namespace

int sign_variations(const SturmChain& c, const Rational& x) {
  std::vector<int> s;
  for (const auto& p : c.seq) s.push_back(sgn(p(x)));
  return variations(s);
}

int sign_variations_at_infinity(const SturmChain& c, bool positive) {
  std::vector<int> s;
  for (const auto& p : c.seq) {
    int v = sgn(p.lead());
    if (!positive && p.degree() % 2 == 1) v = -v;
    s.push_back(v);
  }
  return variations(s);
}

Rational cauchy_bound(const QPoly& p) {
  if (p.is_zero_poly()) throw Error("oracle", Condition::kPrecondition, "root bound of the zero polynomial");
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeff(i) / p.lead());
    if (r > m) m = r;
  }
  return m + 1;
}

int count_roots(const QPoly& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  if (p.is_zero_poly()) throw Error("oracle", Condition::kPrecondition, "count_roots of the zero polynomial");
  if (lo && hi && !(*lo < *hi)) return 0;
  QPoly q = strip_endpoints(p, lo, hi);
  if (q.degree() <= 0) return 0;
  SturmChain c = sturm_chain(q);
  int vlo = lo ? sign_variations(c, *lo) : sign_variations_at_infinity(c, false);
  int vhi = hi ? sign_variations(c, *hi) : sign_variations_at_infinity(c, true);
  return vlo - vhi;
}

namespace {

Integer integer_lead(const QPoly& q) {
  Integer den = 1;
  for (const auto& c : q.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Rational l = q.lead() * Rational(den);
  return abs(l.get_num());
}

struct Isolator {
  const QPoly& q;
  SturmChain chain;
  Rational rational_width;  // below this width a rational root is unique
  std::vector<AlgebraicPoint> out;

  int count(const Rational& lo, const Rational& hi) const {
    // lo and hi are never roots here.
    return sign_variations(chain, lo) - sign_variations(chain, hi);
  }

  void finish(Rational lo, Rational hi) {
    int slo = sgn(q(lo));
    while (hi - lo >= rational_width) {
      Rational mid = (lo + hi) / 2;
      int sm = sgn(q(mid));
      if (sm == 0) {
        out.push_back({q, mid, mid});
        return;
      }
      if (sm == slo) lo = mid;
      else hi = mid;
    }
    Rational cand = simplest_between(lo, hi);
    if (is_zero(q(cand))) out.push_back({q, cand, cand});
    else out.push_back({q, lo, hi});
  }

  void solve(const Rational& lo, const Rational& hi, int n) {
    if (n == 0) return;
    if (n == 1) {
      finish(lo, hi);
      return;
    }
    Rational mid = (lo + hi) / 2;
    if (is_zero(q(mid))) {
      out.push_back({q, mid, mid});
      // Nudge both halves away from the rational root.
      Rational eps = (hi - lo) / 4;
      Rational a = mid - eps, b = mid + eps;
      while (is_zero(q(a)) || is_zero(q(b)) || count(a, b) != 1) {
        eps /= 2;
        a = mid - eps;
        b = mid + eps;
      }
      solve(lo, a, count(lo, a));
      solve(b, hi, count(b, hi));
      return;
    }
    solve(lo, mid, count(lo, mid));
    solve(mid, hi, count(mid, hi));
  }
};

}  // namespace

std::vector<AlgebraicPoint> isolate_roots(const QPoly& p) {
  if (p.is_zero_poly()) throw Error("oracle", Condition::kPrecondition, "isolate_roots of the zero polynomial");
  QPoly q = squarefree_part(p);
  if (q.degree() <= 0) return {};
  Rational B = cauchy_bound(q);
  Integer L = integer_lead(q);
  Isolator iso{q, sturm_chain(q), Rational(1) / Rational(L * L * 2), {}};
  iso.solve(-B, B, iso.count(-B, B));
  std::sort(iso.out.begin(), iso.out.end(),
            [](const AlgebraicPoint& a, const AlgebraicPoint& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  return iso.out;
}

int tarski_query(const QPoly& p, const QPoly& q) {
  if (q.is_zero_poly()) throw Error("oracle", Condition::kPrecondition, "tarski_query with zero q");
  if (gcd(q, q.derivative()).degree() > 0) throw Error("oracle", Condition::kNotSquarefree, "q must be squarefree");
  if (q.degree() <= 0) return 0;
  SturmChain c = sturm_sequence(q, q.derivative() * p);
  return sign_variations_at_infinity(c, false) - sign_variations_at_infinity(c, true);
}

int sign_at(const QPoly& g, const AlgebraicPoint& a) {
  if (a.is_rational()) return sgn(g(a.lo));
  SturmChain c = sturm_sequence(a.poly, a.poly.derivative() * g);
  return sign_variations(c, a.lo) - sign_variations(c, a.hi);
}

AlgebraicPoint refine(const AlgebraicPoint& a, const Rational& width) {
  AlgebraicPoint r = a;
  if (r.is_rational()) return r;
  int slo = sgn(r.poly(r.lo));
  while (r.hi - r.lo >= width) {
    Rational mid = (r.lo + r.hi) / 2;
    int sm = sgn(r.poly(mid));
    if (sm == 0) return {r.poly, mid, mid};
    if (sm == slo) r.lo = mid;
    else r.hi = mid;
  }
  return r;
}

int compare(const AlgebraicPoint& a, const Rational& x) {
  if (a.is_rational()) return a.lo < x ? -1 : (a.lo == x ? 0 : 1);
  if (x <= a.lo) return 1;
  if (x >= a.hi) return -1;
  int slo = sgn(a.poly(a.lo));
  int sx = sgn(a.poly(x));
  return sx != slo ? -1 : 1;
}

int compare(const AlgebraicPoint& a, const AlgebraicPoint& b) {
  if (a.is_rational()) return -compare(b, a.lo);
  if (b.is_rational()) return compare(a, b.lo);
  AlgebraicPoint x = a, y = b;
  QPoly g = gcd(x.poly, y.poly);
  for (;;) {
    if (x.hi <= y.lo) return -1;
    if (y.hi <= x.lo) return 1;
    Rational lo = std::max(x.lo, y.lo), hi = std::min(x.hi, y.hi);
    if (g.degree() > 0 && count_roots(g, lo, hi) > 0) {
      // The common root in the overlap is the unique root of each poly there.
      if (!is_zero(g(lo)) && !is_zero(g(hi))) return 0;
    }
    x = refine(x, (x.hi - x.lo) / 2);
    y = refine(y, (y.hi - y.lo) / 2);
    if (x.is_rational() || y.is_rational()) return compare(x, y);
  }
}

SquarefreeDecomposition squarefree_decomposition(const QPoly& g) {
  if (g.is_zero_poly()) throw Error("oracle", Condition::kPrecondition, "squarefree decomposition of zero");
  SquarefreeDecomposition out{g.lead(), {}};
  if (g.degree() == 0) return out;
  QPoly f = monic(g);
  QPoly a = gcd(f, f.derivative());
  QPoly b = exact_quotient(f, a);
  QPoly c = exact_quotient(f.derivative(), a);
  QPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    QPoly ai = gcd(b, d);
    b = exact_quotient(b, ai);
    c = exact_quotient(d, ai);
    d = c - b.derivative();
    if (ai.degree() > 0) out.factors.emplace_back(ai, i);
    ++i;
  }
  return out;
}

QPoly to_unipoly(const QPolynomial& p, std::size_t var) {
  std::vector<Rational> c;
  for (const auto& [e, v] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0) throw Error("oracle", Condition::kPrecondition, "polynomial is not univariate");
    std::size_t k = static_cast<std::size_t>(e[var]);
    if (c.size() <= k) c.resize(k + 1, Rational(0));
    c[k] += v;
  }
  return QPoly(std::move(c));
}

QPolynomial from_unipoly(const QPoly& p, std::size_t nvars, std::size_t var) {
  QPolynomial out(nvars);
  for (int i = 0; i <= p.degree(); ++i) out.add_term(Exponent::unit(nvars, var, i), p.coeff(i));
  return out;
}

int winding_number(const std::vector<QPolynomial>& F, const Rational& radius) {
  if (F.size() != 2 || F[0].nvars() != 2 || F[1].nvars() != 2)
    throw Error("oracle", Condition::kPrecondition, "winding number needs a planar map (2 components, 2 variables)");
  if (sgn(radius) <= 0) throw Error("oracle", Condition::kPrecondition, "radius must be positive");
  const QPoly one_plus = QPoly{Rational(1), Rational(0), Rational(1)};
  const QPoly xnum = QPoly{radius, Rational(0), -radius};  // r(1 - t^2)
  const QPoly ynum = QPoly{Rational(0), 2 * radius};      // 2 r t
  std::vector<QPoly> N;
  for (const auto& f : F) {
    if (f.is_zero_poly()) throw Error("oracle", Condition::kWindingUncertified, "component vanishes identically");
    const int d = f.degree();
    QPoly acc;
    for (const auto& [e, c] : f.terms())
      acc += (pow(xnum, static_cast<unsigned>(e[0])) * pow(ynum, static_cast<unsigned>(e[1])) *
              pow(one_plus, static_cast<unsigned>(d - e.degree())))
                 .scaled(c);
    N.push_back(acc);
  }
  auto at_infinity = [&](const QPolynomial& f) {
    return f.substituted(0, -radius).substituted(1, Rational(0)).coeff(Exponent(2));
  };
  if (is_zero(at_infinity(F[0])) && is_zero(at_infinity(F[1])))
    throw Error("oracle", Condition::kWindingUncertified, "map vanishes on the circle");
  if (N[0].is_zero_poly() || N[1].is_zero_poly())
    throw Error("oracle", Condition::kWindingUncertified, "a component vanishes on the whole circle");
  QPoly g = gcd(N[0], N[1]);
  if (g.degree() > 0 && count_roots(g, std::nullopt, std::nullopt) > 0)
    throw Error("oracle", Condition::kWindingUncertified, "map vanishes on the circle");
  std::vector<AlgebraicPoint> roots = isolate_roots(N[0] * N[1]);
  if (roots.empty()) return 0;
  std::vector<Rational> samples;
  samples.push_back(roots.front().lo - 1);
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    const Rational& a = roots[i].hi;
    const Rational& b = roots[i + 1].lo;
    samples.push_back(a == b ? a : simplest_between(a, b));
  }
  samples.push_back(roots.back().hi + 1);
  auto quadrant = [&](const Rational& t) {
    int s0 = sgn(N[0](t)), s1 = sgn(N[1](t));
    if (s0 == 0 || s1 == 0) throw Error("oracle", Condition::kWindingUncertified, "sample landed on an axis");
    if (s0 > 0) return s1 > 0 ? 0 : 3;
    return s1 > 0 ? 1 : 2;
  };
  std::vector<int> q;
  for (const auto& t : samples) q.push_back(quadrant(t));
  int quarter = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    int a = q[i], b = q[(i + 1) % q.size()];
    int d = ((b - a) % 4 + 4) % 4;
    if (d == 1) ++quarter;
    else if (d == 3) --quarter;
    else if (d == 2) throw Error("oracle", Condition::kWindingUncertified, "ambiguous half turn");
  }
  if (quarter % 4 != 0) throw Error("oracle", Condition::kWindingUncertified, "quarter turns do not close up");
  return quarter / 4;
}

int winding_degree(const std::vector<QPolynomial>& F, int first_j, int max_j, int agree) {
  std::optional<int> prev;
  int run = 0;
  for (int j = first_j; j <= max_j; ++j) {
    Rational r(1);
    r /= Rational(Integer(1) << j);
    int w;
    try {
      w = winding_number(F, r);
    } catch (const Error& e) {
      if (e.condition() != Condition::kWindingUncertified) throw;
      prev.reset();
      run = 0;
      continue;
    }
    run = (prev && *prev == w) ? run + 1 : 1;
    prev = w;
    if (run >= agree) return w;
  }
  throw Error("oracle", Condition::kWindingUncertified,
              "winding numbers did not agree on " + std::to_string(agree) + " consecutive radii down to 2^-" +
                  std::to_string(max_j));
}

std::optional<int> fiber_root_count(const QPolynomial& f, const Rational& w0) {
  if (f.nvars() != 2) throw Error("oracle", Condition::kPrecondition, "fiber_root_count expects variables (w, y)");
  QPoly u = to_unipoly(f.substituted(0, w0), 1);
  if (u.is_zero_poly()) return std::nullopt;
  return count_roots(u, std::nullopt, std::nullopt);
}

}  // namespace algcon
