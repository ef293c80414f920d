// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "algcon/cfun.hpp"
#include "algcon/degree.hpp"
#include "algcon/eulerchar.hpp"
#include "algcon/oracle.hpp"
#include "algcon/paramfamily.hpp"
#include "algcon/parser.hpp"

using namespace algcon;

namespace {

using Clock = std::chrono::steady_clock;

QPolynomial P(const std::string& text, const std::string& vars) {
  return parse_polynomial(text, parse_variable_list(vars));
}

std::vector<QPolynomial> Ps(const std::vector<std::string>& texts, const std::string& vars) {
  std::vector<QPolynomial> out;
  for (const auto& t : texts) out.push_back(P(t, vars));
  return out;
}

QPoly U(const std::string& text) { return to_unipoly(P(text, "w"), 0); }

SumOfSigns S(const std::vector<std::string>& texts) {
  SumOfSigns s;
  for (const auto& t : texts) s.polys.push_back(U(t));
  return s;
}

Rational random_rational(std::mt19937& rng, int range = 400, int max_den = 37) {
  std::uniform_int_distribution<int> num(-range, range), den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

QPoly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-4, 4);
  for (;;) {
    std::vector<Rational> c;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) c.emplace_back(coef(rng));
    QPoly p(c);
    if (!p.is_zero_poly()) return p;
  }
}

SumOfSigns random_sum(std::mt19937& rng, int max_terms, int max_degree) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  SumOfSigns s;
  const int k = terms(rng);
  for (int i = 0; i < k; ++i) s.polys.push_back(random_poly(rng, max_degree));
  return s;
}

// Exact one-sided limit of sgn g at a rational point (side = +1 or -1).
int one_sided_sign(const QPoly& g, const Rational& w0, int side) {
  const QPoly shifted = compose(g, QPoly({w0, Rational(1)}));
  for (int k = 0; k <= shifted.degree(); ++k) {
    const int s = sgn(shifted.coeff(k));
    if (s != 0) return (side < 0 && k % 2 == 1) ? -s : s;
  }
  return 0;
}

int one_sided_value(const SumOfSigns& phi, const Rational& w0, int side) {
  int v = 0;
  for (const auto& g : phi.polys) v += one_sided_sign(g, w0, side);
  return v;
}

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // <= 0: no limit of its own
  std::function<Outcome()> run;
};

std::vector<double> g_seconds(13, 0.0);
std::vector<bool> g_within(13, true);

// ---- criteria ------------------------------------------------------------

int sturm_signature(const QPoly& p) {
  int s = 0;
  for (const auto& [f, m] : squarefree_decomposition(p).factors)
    s += m * (count_roots(f, Rational(0), std::nullopt) - count_roots(f, std::nullopt, Rational(0)));
  return s;
}

Outcome criterion1() {
  Outcome o;
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> deg(1, 8);
  for (int i = 0; i < 500; ++i) {
    QPoly p(Rational(1));
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) {
      Rational r = random_rational(rng, 30, 6);
      if (r == 0) r = Rational(1, 2);
      p = p * QPoly({-r, Rational(1)});
    }
    const Signature s = signature_descartes(p);
    o.require(s.value == sturm_signature(p), "signature mismatch on " + to_string(p, "x"));
    const int n = p.degree();
    const int sa = sgn(p.coeff(0)) * sgn(p.lead());
    int m4 = (n + 1 + ((n + 1) % 2 == 0 ? 1 : -1) * sa) % 4;
    if (m4 < 0) m4 += 4;
    o.require(s.mod4 == m4 && ((s.value % 4) + 4) % 4 == m4, "mod-4 identity fails on " + to_string(p, "x"));
  }
  o.detail = o.ok ? "500 products, signature and mod-4 identity match Sturm" : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  const std::vector<std::vector<std::string>> corpus{
      {"x", "y"},          {"x^2-y^2", "2*x*y"}, {"x^3-3*x*y^2", "3*x^2*y-y^3"},
      {"2*x", "2*y"},      {"2*x", "-2*y"},      {"3*x^2-3*y^2", "-6*x*y"}};
  for (const auto& F : corpus) {
    const auto map = Ps(F, "x,y");
    o.require(local_degree(map) == winding_degree(map), "corpus map (" + F[0] + ", " + F[1] + ")");
  }
  std::mt19937 rng(202);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int i = 0; i < 25; ++i) {
    Map F;
    for (int c = 0; c < 2; ++c) {
      QPolynomial p(2);
      for (const Exponent& e : exponents_up_to(2, 3))
        if (e.degree() > 0 && rng() % 2 == 0) p.add_term(e, Rational(coef(rng)));
      F.push_back(p);
    }
    F = regularize(F, 4 + i % 2);
    o.require(local_degree(F) == winding_degree(F), "random germ " + std::to_string(i));
  }
  if (o.ok) o.detail = "6 corpus maps and 25 random regularized germs agree with winding numbers";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const int a = chi_milnor_halfset(P("x^2+y^2", "x,y"));
  const int b = chi_milnor_halfset(P("x^2-y^2", "x,y"));
  const int c = chi_milnor_halfset(P("x^3-3*x*y^2", "x,y"));
  o.require(a == 0 && b == 2 && c == 3, "got " + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c));
  if (o.ok) o.detail = "0, 2, 3";
  return o;
}

Outcome criterion4() {
  Outcome o;
  struct Case {
    const char* name;
    std::vector<std::string> gens;
    const char* vars;
    int chi;
  };
  const std::vector<Case> cases{
      {"point", {"y1", "y2"}, "y1,y2", 1},         {"two points", {"y^2-1"}, "y", 2},
      {"circle", {"y1^2+y2^2-1"}, "y1,y2", 0},     {"sphere", {"y1^2+y2^2+y3^2-1"}, "y1,y2,y3", 2},
      {"hyperbola", {"y1*y2-1"}, "y1,y2", 2},      {"parabola", {"y2-y1^2"}, "y1,y2", 1},
      {"cuspidal cubic", {"y2^2-y1^3"}, "y1,y2", 1}, {"line", {"y2"}, "y1,y2", 1},
      {"plane", {}, "y1,y2", 1},                   {"empty set", {"1"}, "y1,y2", 0}};
  std::ostringstream got;
  for (const auto& c : cases) {
    const std::size_t n = parse_variable_list(c.vars).size();
    const int v = chi_affine(Ps(c.gens, c.vars), n);
    got << c.name << ":" << v << " ";
    o.require(v == c.chi, std::string(c.name) + " gave " + std::to_string(v));
  }
  if (o.ok) o.detail = got.str();
  return o;
}

struct Family {
  std::string gen;
  std::vector<std::string> expected;
};

const std::vector<Family>& families() {
  static const std::vector<Family> f{{"y^2-w", {"w", "1"}}, {"y*(y^2-w)", {"1", "w", "w^2"}}, {"y^2+w^2", {"1", "-w^2"}}};
  return f;
}

Outcome criterion5() {
  Outcome o;
  std::ostringstream times;
  for (const auto& fam : families()) {
    const auto t0 = Clock::now();
    const QPolynomial f = P(fam.gen, "w,y");
    FamilyResult r = chi_family({f}, 2);
    o.require(r.exact(), fam.gen + ": result not exact");
    o.require(equals(r.value, S(fam.expected)), fam.gen + ": got " + to_string(r.value, "w"));
    std::vector<Rational> pts;
    for (const auto& b : breakpoints_of(r.sigma_polys))
      if (b.is_rational()) pts.push_back(b.lo);
    pts.push_back(Rational(0));
    std::mt19937 rng(505);
    while (pts.size() < 200) pts.push_back(random_rational(rng));
    for (const Rational& w : pts) {
      const auto count = fiber_root_count(f, w);
      o.require(count && evaluate(r.value, w) == *count, fam.gen + ": fibre count differs at w = " + w.get_str());
    }
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    o.require(s < 60.0, fam.gen + ": took " + std::to_string(s) + " s");
    times << fam.gen << " " << to_string(r.value, "w") << "; ";
  }
  if (o.ok) o.detail = times.str() + "200 samples each";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937 rng(606);
  for (const auto& fam : families()) {
    const std::vector<QPolynomial> gens{P(fam.gen, "w,y")};
    const FamilyMap F = to_family(gens);
    const FamilyResult chi = chi_family(gens, 2);
    const FamilyResult deg = degree_family(F);
    for (int i = 0; i < 50; ++i) {
      const Rational w = random_rational(rng);
      const Map at = specialize_at(F, w);
      o.require(evaluate(chi.value, w) == chi_affine(at, 1), fam.gen + ": chi differs at " + w.get_str());
      o.require(evaluate(deg.value, w) == local_degree(at), fam.gen + ": degree differs at " + w.get_str());
    }
  }
  const FamilyMap cubic = to_family(Ps({"y^3+w*y"}, "w,y"));
  const FamilyResult d = degree_family(cubic);
  for (int i = 0; i < 50; ++i) {
    const Rational w = random_rational(rng);
    o.require(evaluate(d.value, w) == local_degree(specialize_at(cubic, w)), "y^3+w*y: degree differs at " + w.get_str());
  }
  if (o.ok) o.detail = "chi_family and degree_family match pointwise runs at 50 parameters per family";
  return o;
}

Outcome criterion7() {
  Outcome o;
  o.require(equals(link(S({"w"})), S({"w", "w"})), "link([w]) != [w, w]");
  std::mt19937 rng(707);
  for (int i = 0; i < 100; ++i) {
    const SumOfSigns phi = random_sum(rng, 3, 6);
    const SumOfSigns L = link(phi), H = half_link(phi);
    o.require(equals(add(H, H), L), "half_link doubled != link for " + to_string(phi, "w"));
    std::vector<AlgebraicPoint> pts = breakpoints_of(phi.polys);
    for (const Rational& c : cell_samples(pts)) {
      o.require(evaluate(L, c) == 2 * evaluate(phi, c), "link off the breakpoints");
      o.require(2 * evaluate(H, c) == evaluate(L, c), "half link not half at a cell sample");
    }
    for (const auto& b : pts) {
      const int l = evaluate_at_algebraic(L, b), h = evaluate_at_algebraic(H, b);
      o.require(l == 2 * h, "half link not half at a root");
      if (b.is_rational())
        o.require(l == one_sided_value(phi, b.lo, 1) + one_sided_value(phi, b.lo, -1), "link at a rational root");
    }
  }
  if (o.ok) o.detail = "link([w]) = [w,w]; 100 random sums checked at every root and cell";
  return o;
}

Outcome criterion8() {
  Outcome o;
  OneSidedLimits l = one_sided_limits(Ps({"t*w"}, "w,t"));
  o.require(equals(l.plus, S({"w"})) && equals(l.minus, S({"-w"})) && equals(l.half, S({"w"})), "[t*w] example");
  std::mt19937 rng(808);
  std::uniform_int_distribution<int> coef(-2, 2), nterms(1, 2);
  for (int i = 0; i < 100; ++i) {
    std::vector<QPolynomial> gamma;
    const int k = nterms(rng);
    while (static_cast<int>(gamma.size()) < k) {
      QPolynomial g(2);
      for (const Exponent& e : exponents_up_to(2, 3))
        if (rng() % 3 == 0) g.add_term(e, Rational(coef(rng)));
      if (!g.is_zero_poly()) gamma.push_back(g);
    }
    const OneSidedLimits lim = one_sided_limits(gamma);
    for (int j = 0; j < 20; ++j) {
      const Rational w0 = j < 5 ? Rational(j - 2) : random_rational(rng, 60, 7);
      int plus = 0, minus = 0;
      for (const auto& g : gamma) {
        const QPoly gt = to_unipoly(g.substituted(0, w0), 1);
        for (int e = 0; e <= gt.degree(); ++e) {
          const int s = sgn(gt.coeff(e));
          if (s == 0) continue;
          plus += s;
          minus += e % 2 ? -s : s;
          break;
        }
      }
      o.require(evaluate(lim.plus, w0) == plus && evaluate(lim.minus, w0) == minus &&
                    2 * evaluate(lim.half, w0) == plus - minus,
                "limits differ at w = " + w0.get_str() + " (instance " + std::to_string(i) + ")");
    }
  }
  if (o.ok) o.detail = "[t*w] example; 100 random instances x 20 parameters";
  return o;
}

Outcome criterion9() {
  Outcome o;
  auto at0 = [](const Specialization& s) {
    return std::vector<int>{evaluate(s.plus, Rational(0)), evaluate(s.minus, Rational(0)), evaluate(s.half_diff, Rational(0))};
  };
  auto vanish_off_zero = [](const Specialization& s) {
    for (const Rational& w : {Rational(-3), Rational(1, 2), Rational(5)})
      if (evaluate(s.plus, w) != 0 || evaluate(s.minus, w) != 0 || evaluate(s.half_diff, w) != 0) return false;
    return true;
  };
  const Specialization a = specialize(S({"w"}), U("w"));
  o.require(at0(a) == std::vector<int>{1, -1, 1} && vanish_off_zero(a), "phi=[w], f=w");
  const Specialization b = specialize(S({"w"}), U("w^2"));
  o.require(at0(b)[0] == 0 && at0(b)[1] == 0 && vanish_off_zero(b), "phi=[w], f=w^2");
  const Specialization c = specialize(S({"1"}), U("w^2"));
  o.require(at0(c) == std::vector<int>{2, 0, 1} && vanish_off_zero(c), "phi=[1], f=w^2");

  std::mt19937 rng(909);
  for (int i = 0; i < 100; ++i) {
    const SumOfSigns phi = random_sum(rng, 3, 4);
    QPoly f = random_poly(rng, 4);
    if (f.degree() < 1) f = f * U("w-1");
    const Specialization sp = specialize(phi, f);
    std::vector<QPoly> polys = phi.polys;
    polys.push_back(f);
    std::vector<AlgebraicPoint> pts = breakpoints_of(polys);
    for (const Rational& w : cell_samples(pts)) {
      const int p = evaluate(sp.plus, w), m = evaluate(sp.minus, w);
      o.require((p - m) % 2 == 0 && 2 * evaluate(sp.half_diff, w) == p - m, "half difference at a cell sample");
    }
    for (const auto& b : pts) {
      const int p = evaluate_at_algebraic(sp.plus, b), m = evaluate_at_algebraic(sp.minus, b);
      o.require((p - m) % 2 == 0 && 2 * evaluate_at_algebraic(sp.half_diff, b) == p - m, "half difference at a root");
      if (!b.is_rational() || !is_zero(f(b.lo))) continue;
      // Fibre rule at a rational root of f.
      int mult = 0;
      QPoly rest = f;
      const QPoly lin({-b.lo, Rational(1)});
      while (is_zero(rest(b.lo))) {
        rest = exact_quotient(rest, lin);
        ++mult;
      }
      const int s = sgn(rest(b.lo));
      const int up = one_sided_value(phi, b.lo, 1), down = one_sided_value(phi, b.lo, -1);
      auto rule = [&](int sign) {
        if (mult % 2 == 1) return sign > 0 ? up : down;
        return sign > 0 ? up + down : 0;
      };
      o.require(p == rule(s) && m == rule(-s), "fibre rule at w = " + b.lo.get_str() + " for phi = " +
                                                    to_string(phi, "w") + ", f = " + to_string(f, "w") + ": got (" +
                                                    std::to_string(p) + ", " + std::to_string(m) + "), expected (" +
                                                    std::to_string(rule(s)) + ", " + std::to_string(rule(-s)) + ")");
    }
  }
  if (o.ok) o.detail = "three worked examples; 100 random pairs integer-valued at every root and cell";
  return o;
}

Outcome criterion10() {
  Outcome o;
  const int e = euler_integral(S({"1-w^2", "1"}));
  o.require(e == 0, "euler_integral([1-w^2, 1]) = " + std::to_string(e));
  const StepFunction push = pushforward(S({"1"}), U("w^2"));
  o.require(equals(push, S({"w", "1"})), "pushforward([1], w^2) differs from sgn(y) + 1");
  if (o.ok) o.detail = "integral 0; pushforward of 1 along w^2 is sgn(y) + 1";
  return o;
}

Outcome criterion11() {
  Outcome o;
  StepFunction bad;
  bad.breakpoints = isolate_roots(U("w"));
  bad.interval_values = {0, 1};
  bad.point_values = {0};
  bool rejected = false;
  try {
    from_step_function(bad);
  } catch (const Error& e) {
    rejected = e.condition() == Condition::kNotRepresentable;
  }
  o.require(rejected, "(0|.|1) was not rejected as NotRepresentable");
  StepFunction good = bad;
  good.interval_values = {0, 2};
  good.point_values = {5};
  o.require(equals(good, from_step_function(good)), "(0|5|2) not reproduced");
  for (const auto& fam : families()) {
    const SumOfSigns phi = chi_family({P(fam.gen, "w,y")}, 2).value;
    const Mod4Invariant m = mod4_invariant(phi);
    std::vector<AlgebraicPoint> pts = breakpoints_of(m.sigma);
    for (const Rational& w : cell_samples(pts)) {
      const int lhs = ((evaluate(phi, w) - m.mu - sgn(m.g(w))) % 4 + 4) % 4;
      o.require(lhs == 0, fam.gen + ": mod-4 invariant fails at " + w.get_str());
    }
  }
  if (o.ok) o.detail = "parity obstruction rejected, (0|5|2) rebuilt, mod-4 invariants hold on all family outputs";
  return o;
}

Outcome criterion12() {
  Outcome o;
  const std::vector<std::pair<std::vector<std::string>, std::string>> systems{
      {{"x^7+x*y^8+y^9", "y^8+x^6*y^3-x^8"}, "x,y"},
      {{"x^4+y*z^2", "y^4+x^2*z", "z^3+x*y^2"}, "x,y,z"},
      {{"x^3+y*z*u", "y^3+x*u^2", "z^3+x^2*y", "u^2+x*y*z"}, "x,y,z,u"}};
  std::ostringstream d;
  for (const auto& [gens, vars] : systems) {
    const auto t0 = Clock::now();
    const QuotientAlgebra<Rational> q = quotient(Ps(gens, vars), QuotientOptions::from_environment());
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    o.require(q.dimension() <= 60, "test system exceeds |Delta| = 60");
    o.require(s < 10.0, "quotient with |Delta| = " + std::to_string(q.dimension()) + " took " + std::to_string(s) + " s");
    char buf[64];
    std::snprintf(buf, sizeof buf, "|Delta|=%zu in %.2f s; ", q.dimension(), s);
    d << buf;
  }
  for (int id = 1; id <= 11; ++id)
    o.require(g_within[static_cast<std::size_t>(id)], "criterion " + std::to_string(id) + " exceeded its time limit");
  if (o.ok) o.detail = d.str() + "all criteria within their limits";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Descartes signature vs Sturm", 5, criterion1},
      {2, "local degree vs winding number", 60, criterion2},
      {3, "Milnor half-set Euler characteristics", 0, criterion3},
      {4, "Euler characteristic corpus", 120, criterion4},
      {5, "family flagship (60 s per family)", 180, criterion5},
      {6, "specialization coherence", 0, criterion6},
      {7, "link and half-link", 0, criterion7},
      {8, "one-sided limits", 0, criterion8},
      {9, "specializations", 0, criterion9},
      {10, "Euler integral and pushforward", 0, criterion10},
      {11, "representability obstructions and mod-4 invariant", 0, criterion11},
      {12, "performance envelope", 0, criterion12},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    g_seconds[static_cast<std::size_t>(c.id)] = s;
    if (c.limit_seconds > 0 && s >= c.limit_seconds) {
      g_within[static_cast<std::size_t>(c.id)] = false;
      if (o.ok) o.detail = "over the time limit";
      o.ok = false;
    }
    if (!o.ok) ++failures;
    char timing[64];
    if (c.limit_seconds > 0)
      std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", s, c.limit_seconds);
    else
      std::snprintf(timing, sizeof timing, "%.2f s", s);
    std::printf("criterion %2d %s  %s: %s (%s)\n", c.id, o.ok ? "PASS" : "FAIL", c.title.c_str(), o.detail.c_str(), timing);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
