#include <gtest/gtest.h>

#include <random>

#include "algcon/cfun.hpp"
#include "support.hpp"

using namespace algcon;
using namespace algcon::test;

namespace {

AlgebraicPoint root_of(const std::string& p, int index) { return isolate_roots(U(p)).at(static_cast<std::size_t>(index)); }

QPoly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-4, 4);
  for (;;) {
    std::vector<Rational> c;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) c.push_back(Rational(coef(rng)));
    QPoly p(c);
    if (!p.is_zero_poly()) return p;
  }
}

// Products of small rational linear and quadratic factors, so roots repeat.
QPoly random_factored(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> pick(0, 5), root(-2, 2), nf(0, 3);
  QPoly p(Rational(pick(rng) % 2 ? 1 : -1));
  const int n = nf(rng);
  for (int i = 0; i < n && p.degree() + 2 <= max_degree; ++i) {
    switch (pick(rng)) {
      case 0: p = p * U("w^2-2"); break;
      case 1: p = p * U("w^2+1"); break;
      default: p = p * (QPoly::x() - QPoly(Rational(root(rng)))); break;
    }
  }
  return p;
}

SumOfSigns random_sum(std::mt19937& rng, std::size_t max_terms, int max_degree) {
  std::uniform_int_distribution<std::size_t> n(1, max_terms);
  std::uniform_int_distribution<int> coin(0, 1);
  SumOfSigns s;
  const std::size_t k = n(rng);
  for (std::size_t i = 0; i < k; ++i)
    s.polys.push_back(coin(rng) ? random_factored(rng, max_degree) : random_poly(rng, max_degree));
  return s;
}

// Every root and one sample per open cell of all listed polynomials.
template <class Fn>
void for_each_test_point(const std::vector<QPoly>& polys, Fn fn) {
  std::vector<AlgebraicPoint> pts = breakpoints_of(polys);
  std::vector<Rational> samples = cell_samples(pts);
  for (const auto& x : samples) fn(AlgebraicPoint{QPoly::x() - QPoly(x), x, x});
  for (const auto& p : pts) fn(p);
}

}  // namespace

TEST(Cfun, EvaluateExamples) {
  EXPECT_EQ(evaluate(S({"w", "1"}), Rational(2)), 2);
  EXPECT_EQ(evaluate(S({"w", "1"}), Rational(0)), 1);
  EXPECT_EQ(evaluate(S({"w", "1"}), Rational(-3)), 0);
  EXPECT_EQ(evaluate(SumOfSigns{}, Rational(5)), 0);
  EXPECT_EQ(evaluate(S({"w", "-w"}), Rational(7)), 0);
}

TEST(Cfun, EvaluateAtAlgebraicExamples) {
  EXPECT_EQ(evaluate_at_algebraic(S({"w^2-2"}), root_of("w^2-2", 1)), 0);
  EXPECT_EQ(evaluate_at_algebraic(S({"w"}), root_of("w^2-2", 1)), 1);
  EXPECT_EQ(evaluate_at_algebraic(S({"w", "1"}), root_of("w^2-2", 0)), 0);
}

TEST(Cfun, EvaluateAtAlgebraicRejectsBadIntervals) {
  AlgebraicPoint both{U("w^2-2"), Rational(-2), Rational(2)};
  EXPECT_THROW(evaluate_at_algebraic(S({"w"}), both), Error);
  AlgebraicPoint none{U("w^2-2"), Rational(2), Rational(3)};
  EXPECT_THROW(evaluate_at_algebraic(S({"w"}), none), Error);
}

TEST(Cfun, RingOperationExamples) {
  EXPECT_TRUE(equals(multiply(S({"w"}), S({"w"})), S({"w^2"})));
  EXPECT_EQ(evaluate(multiply(S({"w"}), S({"w"})), Rational(0)), 0);
  EXPECT_TRUE(equals(multiply(S({"w", "1"}), S({"1"})), S({"w", "1"})));
  EXPECT_TRUE(equals(add(S({"w"}), S({"-w"})), SumOfSigns{}));
  EXPECT_TRUE(equals(S({"w", "-w"}), SumOfSigns{}));
}

TEST(Cfun, EqualsExamples) {
  EXPECT_TRUE(equals(S({"w^3"}), S({"w"})));
  EXPECT_FALSE(equals(S({"w^2"}), S({"1"})));
}

TEST(Cfun, LinkExamples) {
  EXPECT_TRUE(equals(link(S({"w"})), S({"w", "w"})));
  EXPECT_TRUE(equals(link(S({"w^2"})), S({"1", "1"})));
  EXPECT_TRUE(equals(link(S({"1"})), S({"1", "1"})));
}

TEST(Cfun, DualExamples) {
  EXPECT_TRUE(equals(dual(S({"w"})), S({"-w"})));
  EXPECT_TRUE(equals(dual(S({"1"})), S({"-1"})));
  EXPECT_TRUE(equals(dual(S({"1", "-w^2"})), S({"1", "-w^2"})));
}

TEST(Cfun, HalfLinkExamples) {
  EXPECT_TRUE(equals(half_link(S({"w"})), S({"w"})));
  EXPECT_TRUE(equals(half_link(S({"1"})), S({"1"})));
  EXPECT_TRUE(equals(half_link(S({"1", "-w^2"})), SumOfSigns{}));
}

TEST(Cfun, OneSidedLimitsExamples) {
  auto l = one_sided_limits({P("t*w", "w,t")});
  EXPECT_TRUE(equals(l.plus, S({"w"})));
  EXPECT_TRUE(equals(l.minus, S({"-w"})));
  EXPECT_TRUE(equals(l.half, S({"w"})));
  l = one_sided_limits({P("t^2", "w,t")});
  EXPECT_TRUE(equals(l.plus, S({"1"})));
  EXPECT_TRUE(equals(l.minus, S({"1"})));
  EXPECT_TRUE(equals(l.half, SumOfSigns{}));
  l = one_sided_limits({P("w", "w,t")});
  EXPECT_TRUE(equals(l.plus, S({"w"})));
  EXPECT_TRUE(equals(l.minus, S({"w"})));
  EXPECT_TRUE(equals(l.half, SumOfSigns{}));
}

TEST(Cfun, OneSidedLimitsAtIrrationalExceptionalPoints) {
  // gamma = (w^2 - 2) + t*w: at w = +-sqrt 2 the limit is sgn(+-sqrt 2 * t).
  auto l = one_sided_limits({P("w^2-2+t*w", "w,t")});
  EXPECT_EQ(evaluate_at_algebraic(l.plus, root_of("w^2-2", 1)), 1);
  EXPECT_EQ(evaluate_at_algebraic(l.plus, root_of("w^2-2", 0)), -1);
  EXPECT_EQ(evaluate_at_algebraic(l.minus, root_of("w^2-2", 1)), -1);
  EXPECT_EQ(evaluate_at_algebraic(l.half, root_of("w^2-2", 0)), -1);
}

TEST(Cfun, SpecializeExamples) {
  auto s = specialize(S({"w"}), U("w"));
  EXPECT_EQ(evaluate(s.plus, Rational(0)), 1);
  EXPECT_EQ(evaluate(s.minus, Rational(0)), -1);
  EXPECT_EQ(evaluate(s.half_diff, Rational(0)), 1);
  for (int w : {-3, -1, 1, 2}) {
    EXPECT_EQ(evaluate(s.plus, Rational(w)), 0);
    EXPECT_EQ(evaluate(s.minus, Rational(w)), 0);
    EXPECT_EQ(evaluate(s.half_diff, Rational(w)), 0);
  }
  s = specialize(S({"w"}), U("w^2"));
  EXPECT_EQ(evaluate(s.plus, Rational(0)), 0);
  EXPECT_EQ(evaluate(s.minus, Rational(0)), 0);
  s = specialize(S({"1"}), U("w^2"));
  EXPECT_EQ(evaluate(s.plus, Rational(0)), 2);
  EXPECT_EQ(evaluate(s.minus, Rational(0)), 0);
  EXPECT_EQ(evaluate(s.half_diff, Rational(0)), 1);
}

TEST(Cfun, SpecializeFollowsTheSideWhereFIsPositive) {
  // f = 1 - w^2 is decreasing at 1 and increasing at -1.
  auto s = specialize(S({"w", "w-1", "w+1"}), U("1-w^2"));
  EXPECT_EQ(evaluate(s.plus, Rational(1)), 1);    // phi(1-) = 1 - 1 + 1
  EXPECT_EQ(evaluate(s.minus, Rational(1)), 3);   // phi(1+)
  EXPECT_EQ(evaluate(s.plus, Rational(-1)), -1);  // phi(-1+) = -1 - 1 + 1
  EXPECT_EQ(evaluate(s.minus, Rational(-1)), -3); // phi(-1-)
  s = specialize(S({"w"}), U("-3*w"));
  EXPECT_EQ(evaluate(s.plus, Rational(0)), -1);
  EXPECT_EQ(evaluate(s.minus, Rational(0)), 1);
}

TEST(Cfun, EulerIntegralExamples) {
  EXPECT_EQ(euler_integral(S({"1", "-w^2"})), 1);
  EXPECT_EQ(euler_integral(S({"1-w^2", "1"})), 0);
  EXPECT_EQ(euler_integral(SumOfSigns{}), 0);
  EXPECT_THROW(euler_integral(S({"1"})), Error);
}

TEST(Cfun, PushforwardExamples) {
  EXPECT_TRUE(equals(pushforward(S({"1"}), U("w^2")), S({"w", "1"})));
  EXPECT_TRUE(equals(pushforward(S({"1"}), U("w")), S({"1"})));
  EXPECT_TRUE(equals(pushforward(S({"w"}), U("w^2")), SumOfSigns{}));
  EXPECT_THROW(pushforward(S({"1"}), U("3")), Error);
}

TEST(Cfun, PushforwardIrrationalCriticalValues) {
  // f = w^3 - 3w has critical values -+2; f = w^3 - w has irrational ones.
  StepFunction s = pushforward(S({"1"}), U("w^3-w"));
  ASSERT_EQ(s.breakpoints.size(), 2U);
  EXPECT_FALSE(s.breakpoints[0].is_rational());
  EXPECT_EQ(s.interval_values, (std::vector<int>{1, 3, 1}));
  EXPECT_EQ(s.point_values, (std::vector<int>{2, 2}));
}

TEST(Cfun, FromStepFunctionExamples) {
  StepFunction a{{AlgebraicPoint{QPoly::x(), Rational(0), Rational(0)}}, {0, 2}, {5}};
  SumOfSigns r = from_step_function(a);
  EXPECT_TRUE(equals(a, r));
  StepFunction b{{AlgebraicPoint{QPoly::x(), Rational(0), Rational(0)}}, {0, 1}, {4}};
  try {
    from_step_function(b);
    FAIL() << "parity violation accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.condition(), Condition::kNotRepresentable);
  }
  StepFunction c{{}, {7}, {}};
  EXPECT_TRUE(equals(from_step_function(c), S({"1", "1", "1", "1", "1", "1", "1"})));
  EXPECT_EQ(from_step_function(c).size(), 7U);
}

TEST(Cfun, FromStepFunctionIrrationalBreakpoints) {
  // 2 on (-sqrt2, sqrt2), 3 at the two roots, 0 outside: uniform data.
  std::vector<AlgebraicPoint> r = isolate_roots(U("w^2-2"));
  StepFunction s{r, {0, 2, 0}, {3, 3}};
  EXPECT_TRUE(equals(s, from_step_function(s)));
  // Jumps 2 and 4 at conjugate roots: not reachable with rational polynomials.
  StepFunction t{r, {0, 2, 6}, {1, 4}};
  try {
    from_step_function(t);
    FAIL() << "non-uniform conjugate data accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.condition(), Condition::kIrrationalExceptionalPoint);
  }
}

TEST(Cfun, FromStepFunctionRoundTrip) {
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    SumOfSigns phi = random_sum(rng, 3, 4);
    SumOfSigns back = from_step_function(to_step_function(phi));
    EXPECT_TRUE(equals(phi, back)) << to_string(phi, "w");
  }
}

TEST(Cfun, Mod4Examples) {
  Mod4Invariant m = mod4_invariant(S({"w", "1"}));
  EXPECT_EQ(m.mu, 1);
  EXPECT_EQ(m.g, U("w"));
  m = mod4_invariant(S({"1"}));
  EXPECT_EQ(m.mu, 0);
  EXPECT_EQ(m.g, U("1"));
  m = mod4_invariant(S({"w", "w", "w"}));
  EXPECT_EQ(m.mu, 2);
  EXPECT_EQ(m.g, U("w^3"));
}

TEST(Cfun, CanonicalizePreservesFunction) {
  std::mt19937 rng(5);
  for (int i = 0; i < 30; ++i) {
    SumOfSigns phi = random_sum(rng, 3, 5);
    phi = add(phi, negate(SumOfSigns({phi.polys.front()})));
    EXPECT_TRUE(equals(phi, canonicalize(phi)));
  }
  EXPECT_EQ(canonicalize(S({"3*w^3", "-w"})).size(), 0U);
}

// ---- properties ----

TEST(CfunProperty, RingAxioms) {
  std::mt19937 rng(1);
  for (int i = 0; i < 25; ++i) {
    SumOfSigns a = random_sum(rng, 3, 4), b = random_sum(rng, 3, 4), c = random_sum(rng, 3, 4);
    EXPECT_TRUE(equals(add(a, b), add(b, a)));
    EXPECT_TRUE(equals(multiply(a, b), multiply(b, a)));
    EXPECT_TRUE(equals(multiply(multiply(a, b), c), multiply(a, multiply(b, c))));
    EXPECT_TRUE(equals(add(add(a, b), c), add(a, add(b, c))));
    EXPECT_TRUE(equals(multiply(a, add(b, c)), add(multiply(a, b), multiply(a, c))));
  }
}

TEST(CfunProperty, LinkIsLinear) {
  std::mt19937 rng(2);
  for (int i = 0; i < 25; ++i) {
    SumOfSigns a = random_sum(rng, 3, 5), b = random_sum(rng, 3, 5);
    EXPECT_TRUE(equals(link(add(a, b)), add(link(a), link(b))));
  }
}

TEST(CfunProperty, LinkMatchesOneSidedValues) {
  std::mt19937 rng(3);
  for (int i = 0; i < 25; ++i) {
    SumOfSigns phi = random_sum(rng, 3, 5);
    SumOfSigns l = link(phi);
    std::vector<AlgebraicPoint> pts = breakpoints_of(phi.polys);
    std::vector<Rational> samples = cell_samples(pts);
    for (std::size_t k = 0; k < pts.size(); ++k)
      EXPECT_EQ(evaluate_at_algebraic(l, pts[k]), evaluate(phi, samples[k]) + evaluate(phi, samples[k + 1]));
    for (const auto& x : samples) EXPECT_EQ(evaluate(l, x), 2 * evaluate(phi, x));
  }
}

TEST(CfunProperty, GenericParity) {
  std::mt19937 rng(4);
  for (int i = 0; i < 40; ++i) {
    SumOfSigns phi = random_sum(rng, 4, 5);
    std::vector<AlgebraicPoint> pts = breakpoints_of(phi.polys);
    for (const auto& x : cell_samples(pts))
      EXPECT_EQ(((evaluate(phi, x) - static_cast<int>(phi.size())) % 2 + 2) % 2, 0);
  }
}

TEST(CfunProperty, Mod4Identity) {
  std::mt19937 rng(6);
  for (int i = 0; i < 40; ++i) {
    SumOfSigns phi = random_sum(rng, 4, 5);
    Mod4Invariant m = mod4_invariant(phi);
    std::vector<AlgebraicPoint> pts = breakpoints_of(phi.polys);
    for (const auto& x : cell_samples(pts)) {
      const int lhs = ((evaluate(phi, x) - m.mu - sgn(m.g(x))) % 4 + 4) % 4;
      EXPECT_EQ(lhs, 0);
    }
  }
}

TEST(CfunProperty, LimitsMatchPerPointComputation) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, 3);
  for (int i = 0; i < 30; ++i) {
    QPolynomial g(2);
    while (g.is_zero_poly())
      for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 3; ++b)
          if (deg(rng) == 0) g.add_term(Exponent{a, b}, Rational(coef(rng)));
    auto l = one_sided_limits({g});
    for (int w = -3; w <= 3; ++w) {
      // Independent path: specialize w, read the lowest t-coefficient.
      QPolynomial gw = g.substituted(0, Rational(w));
      int plus = 0, minus = 0;
      if (!gw.is_zero_poly()) {
        const auto& [e, c] = *gw.terms().begin();
        plus = sgn(c);
        minus = e[1] % 2 ? -plus : plus;
      }
      EXPECT_EQ(evaluate(l.plus, Rational(w)), plus);
      EXPECT_EQ(evaluate(l.minus, Rational(w)), minus);
      EXPECT_EQ(2 * evaluate(l.half, Rational(w)), plus - minus);
    }
  }
}

TEST(CfunProperty, SpecializationAgreesWithLimits) {
  std::mt19937 rng(8);
  const QPolynomial w = QPolynomial::variable(2, 0), t = QPolynomial::variable(2, 1);
  for (int i = 0; i < 20; ++i) {
    SumOfSigns phi = random_sum(rng, 3, 4);
    std::vector<QPolynomial> gamma;
    for (const auto& g : phi.polys) {
      QPolynomial acc(2);
      for (std::size_t k = g.coeffs().size(); k-- > 0;) acc = acc * (w + t) + QPolynomial(2, g.coeffs()[k]);
      gamma.push_back(acc);
    }
    Specialization s = specialize(phi, U("w"));
    OneSidedLimits l = one_sided_limits(gamma);
    EXPECT_EQ(evaluate(s.plus, Rational(0)), evaluate(l.plus, Rational(0)));
    EXPECT_EQ(evaluate(s.minus, Rational(0)), evaluate(l.minus, Rational(0)));
  }
}

TEST(CfunProperty, PushforwardOfIndicatorCountsFibres) {
  std::mt19937 rng(9);
  for (int i = 0; i < 15; ++i) {
    QPoly f = random_poly(rng, 4);
    if (f.degree() <= 0) continue;
    StepFunction s = pushforward(S({"1"}), f);
    for (int y = -5; y <= 5; ++y) EXPECT_EQ(s.value_at(Rational(y)), count_roots(f - QPoly(Rational(y)), std::nullopt, std::nullopt));
  }
}

TEST(CfunProperty, EulerIntegralOfPushforwardIsPreserved) {
  // Integral of a compactly supported phi equals the integral of f_* phi.
  std::mt19937 rng(10);
  for (int i = 0; i < 10; ++i) {
    SumOfSigns phi = S({"1-w^2", "1"});
    QPoly f = random_poly(rng, 3);
    if (f.degree() <= 0) continue;
    SumOfSigns pushed = from_step_function(pushforward(phi, f));
    EXPECT_EQ(euler_integral(pushed), euler_integral(phi));
  }
}
