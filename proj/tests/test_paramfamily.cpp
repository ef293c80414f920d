#include <gtest/gtest.h>

#include <random>

#include "algcon/paramfamily.hpp"
#include "support.hpp"

using namespace algcon;
using namespace algcon::test;

namespace {

// Rationals spread over [-4, 4], plus the given points.
std::vector<Rational> samples(std::size_t count, unsigned seed, const std::vector<Rational>& extra = {}) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-400, 400), den(1, 37);
  std::vector<Rational> out = extra;
  while (out.size() < count) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

int fiber_count(const QPolynomial& f, const Rational& w) {
  std::optional<int> c = fiber_root_count(f, w);
  if (!c) throw std::runtime_error("fibre is the whole line");
  return *c;
}

struct FlagshipCase {
  std::string gen;
  std::vector<std::string> expected;
  std::vector<Rational> special;
};

class ChiFamilyFlagship : public ::testing::TestWithParam<FlagshipCase> {};

TEST_P(ChiFamilyFlagship, EqualsExpectedAndFibreCounts) {
  const auto& c = GetParam();
  const QPolynomial f = P(c.gen, "w,y");
  FamilyResult r = chi_family({f}, 2);
  EXPECT_TRUE(r.exact());
  EXPECT_TRUE(equals(r.value, S(c.expected))) << to_string(r.value, "w");
  for (const Rational& w : samples(200, 7, c.special)) EXPECT_EQ(evaluate(r.value, w), fiber_count(f, w)) << w;
}

INSTANTIATE_TEST_SUITE_P(Families, ChiFamilyFlagship,
                         ::testing::Values(FlagshipCase{"y^2-w", {"w", "1"}, {Rational(0)}},
                                           FlagshipCase{"y*(y^2-w)", {"1", "w", "w^2"}, {Rational(0)}},
                                           FlagshipCase{"y^2+w^2", {"1", "-w^2"}, {Rational(0)}}));

TEST(ParamFamily, ToFamilyAndSpecialize) {
  FamilyPolynomial f = to_family(P("w^2*y1 - 3*y2^2 + w", "w,y1,y2"));
  EXPECT_EQ(f.nvars(), 2u);
  EXPECT_EQ(specialize_at(f, Rational(2)), P("4*y1 - 3*y2^2 + 2", "y1,y2"));
}

TEST(ParamFamily, GenericQuotientOfQuadratic) {
  GenericQuotient g = generic_quotient(to_family(Ps({"y^2-w*y"}, "w,y")));
  EXPECT_EQ(g.algebra.dimension(), 1u);
  GenericQuotient h = generic_quotient(to_family(Ps({"y^2-w"}, "w,y")));
  EXPECT_EQ(h.algebra.dimension(), 0u);
}

TEST(ParamFamily, GenericQuotientOfCubicGerm) {
  GenericQuotient g = generic_quotient(to_family(Ps({"y^3-w*y^4"}, "w,y")));
  ASSERT_EQ(g.algebra.dimension(), 3u);
  EXPECT_EQ(g.algebra.staircase().delta[2], Exponent({2}));
}

TEST(ParamFamily, ConstantFamilyHasConstantSigma) {
  FamilyMap F = to_family(Ps({"y1^2-y2^2", "y1*y2"}, "w,y1,y2"));
  GenericQuotient g = generic_quotient(F);
  EXPECT_TRUE(g.sigma_polys.empty());
  QuotientAlgebra<Rational> plain = quotient(specialize_at(F, Rational(5)), QuotientOptions::from_environment());
  EXPECT_EQ(plain.staircase().delta, g.algebra.staircase().delta);
}

TEST(ParamFamily, ParametricSignatureConstantCubic) {
  GenericSignatureData d = parametric_signature(to_family(Ps({"y^3"}, "w,y")));
  ASSERT_EQ(d.T.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(d.T[i][j], QPoly(Rational(i + j == 2 ? 3 : 0)));
}

TEST(ParamFamily, ParametricSignatureJumpsAcrossZero) {
  GenericSignatureData d = parametric_signature(to_family(Ps({"y^3+w*y"}, "w,y")));
  ASSERT_FALSE(d.charpoly_coeffs.empty());
  EXPECT_EQ(d.charpoly_coeffs[0](Rational(0)), 0);
}

TEST(ParamFamily, IdentitySignature) {
  GenericSignatureData d = parametric_signature(to_family(Ps({"y"}, "w,y")));
  ASSERT_EQ(d.T.size(), 1u);
  EXPECT_GT(sgn(d.T[0][0].lead()), 0);
}

TEST(ParamFamily, DegreeFamilyLinear) {
  FamilyResult r = degree_family(Ps({"y"}, "w,y"));
  EXPECT_TRUE(equals(r.value, S({"1"})));
}

TEST(ParamFamily, DegreeFamilyCubic) {
  FamilyResult r = degree_family(Ps({"y^3+w*y"}, "w,y"));
  EXPECT_TRUE(equals(r.value, S({"w", "1", "-w^2"}))) << to_string(r.value, "w");
  EXPECT_EQ(evaluate(r.value, Rational(0)), 1);
  EXPECT_EQ(evaluate(r.value, Rational(1)), 1);
  EXPECT_EQ(evaluate(r.value, Rational(-1)), -1);
}

TEST(ParamFamily, DegreeFamilyConstantGerm) {
  FamilyResult r = degree_family(Ps({"y1", "y2"}, "w,y1,y2"));
  EXPECT_TRUE(equals(r.value, S({"1"})));
}

TEST(ParamFamily, DegreeFamilyIrrationalPointsFlagged) {
  const FamilyMap F = to_family(Ps({"y^3+(w^2-2)*y"}, "w,y"));
  FamilyResult r = degree_family(F);
  EXPECT_FALSE(r.exact());
  EXPECT_EQ(r.unresolved.size(), 2u);
  for (const Rational& w : samples(40, 3)) {
    const int expected = local_degree(specialize_at(F, w));
    EXPECT_EQ(evaluate(r.value, w), expected) << w;
  }
}

TEST(ParamFamily, ChiFamilyTwoVariables) {
  // Circle of radius^2 w: empty, point, circle.
  FamilyResult r = chi_family(Ps({"y1^2+y2^2-w"}, "w,y1,y2"), 3);
  EXPECT_TRUE(equals(r.value, S({"1", "-w^2"}))) << to_string(r.value, "w");
}

// Specialization coherence on 50 parameters, against the pointwise pipelines.
struct CoherenceCase {
  std::vector<std::string> gens;
  std::string vars;
  bool degree;  // degree_family of gens, otherwise chi_family
};

class Coherence : public ::testing::TestWithParam<CoherenceCase> {};

TEST_P(Coherence, MatchesPointwise) {
  const auto& c = GetParam();
  const std::vector<QPolynomial> gens = Ps(c.gens, c.vars);
  const std::size_t nvars = gens.front().nvars();
  FamilyResult r = c.degree ? degree_family(gens) : chi_family(gens, nvars);
  const FamilyMap fam = to_family(gens);
  for (const Rational& w : samples(50, 11, {Rational(0), Rational(1), Rational(-1)})) {
    const Map at = specialize_at(fam, w);
    const int expected = c.degree ? local_degree(at) : chi_affine(at, nvars - 1);
    EXPECT_EQ(evaluate(r.value, w), expected) << "w = " << w;
  }
}

INSTANTIATE_TEST_SUITE_P(
    Families, Coherence,
    ::testing::Values(CoherenceCase{{"y^2-w"}, "w,y", false}, CoherenceCase{{"y*(y^2-w)"}, "w,y", false},
                      CoherenceCase{{"y^2+w^2"}, "w,y", false}, CoherenceCase{{"y^3+w*y"}, "w,y", true},
                      CoherenceCase{{"y1^2-w*y2^2", "y1*y2"}, "w,y1,y2", true},
                      CoherenceCase{{"y1^2+y2^2-w"}, "w,y1,y2", false}));

TEST(ParamFamilyProperty, ParityOffSigma) {
  for (const char* g : {"y^2-w", "y*(y^2-w)", "y^2+w^2", "y^3-w*y^2+1"}) {
    FamilyResult r = chi_family(Ps({g}, "w,y"), 2);
    std::vector<AlgebraicPoint> pts = breakpoints_of(r.sigma_polys);
    std::vector<Rational> cells = cell_samples(pts);
    for (const Rational& w : cells) EXPECT_EQ((evaluate(r.value, w) - evaluate(r.value, cells.front())) % 2, 0) << g;
  }
}

TEST(ParamFamilyProperty, PatchAgreesWithGenericOffSigma) {
  for (const char* g : {"y^3+w*y", "y^3+w^2*y-w*y^2"}) {
    FamilyResult r = degree_family(Ps({g}, "w,y"));
    std::vector<AlgebraicPoint> pts = breakpoints_of(r.sigma_polys);
    for (const Rational& w : samples(60, 5)) {
      bool on_sigma = false;
      for (const auto& p : pts) on_sigma = on_sigma || compare(p, w) == 0;
      if (!on_sigma) EXPECT_EQ(evaluate(r.value, w), evaluate(r.generic, w)) << g << " at " << w;
    }
  }
}

TEST(ParamFamilyProperty, ChiFamilyMatchesSturmForUnivariateFibres) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int trial = 0; trial < 8; ++trial) {
    // f = y^3 + a(w) y^2 + b(w) y + c(w) with linear a, b, c
    std::string text = "y^3";
    for (const char* mono : {"*y^2", "*y", ""}) {
      text += " + (" + std::to_string(coef(rng)) + "*w + " + std::to_string(coef(rng)) + ")" + mono;
    }
    const QPolynomial f = P(text, "w,y");
    FamilyResult r = chi_family({f}, 2);
    ASSERT_TRUE(r.steps.has_value());
    auto value = [&](const Rational& w) { return r.symbolic ? evaluate(r.value, w) : r.steps->value_at(w); };
    for (const auto& pt : breakpoints_of(r.sigma_polys))
      if (pt.is_rational()) EXPECT_EQ(value(pt.lo), fiber_count(f, pt.lo)) << text << " at " << pt.lo;
    for (const Rational& w : samples(30, 13 + trial)) EXPECT_EQ(value(w), fiber_count(f, w)) << text;
    if (r.symbolic) EXPECT_TRUE(equals(*r.steps, r.value)) << text;
  }
}

}  // namespace
