#include <stdexcept>

#include "algcon/errors.hpp"
#include "algcon/modp.hpp"
#include "algcon/ratfunc.hpp"
#include "algcon/rational.hpp"

namespace algcon {

const char* condition_name(Condition c) {
  switch (c) {
    case Condition::kParseError: return "ParseError";
    case Condition::kUnknownVariable: return "UnknownVariable";
    case Condition::kPrecondition: return "PreconditionViolated";
    case Condition::kNotFiniteDimensional: return "NotFiniteDimensional";
    case Condition::kNonStabilizing: return "NonStabilizing";
    case Condition::kSocleViolation: return "SocleViolation";
    case Condition::kDegenerateForm: return "DegenerateForm";
    case Condition::kNotRepresentable: return "NotRepresentable";
    case Condition::kNonCompactSupport: return "NonCompactSupport";
    case Condition::kIrrationalExceptionalPoint: return "IrrationalExceptionalPoint";
    case Condition::kNotSquarefree: return "NotSquarefree";
    case Condition::kIsolationFailure: return "IsolationFailure";
    case Condition::kWindingUncertified: return "WindingUncertified";
    case Condition::kZeroFiber: return "ZeroFiber";
  }
  return "Unknown";
}

bool is_usage_condition(Condition c) {
  return c == Condition::kParseError || c == Condition::kUnknownVariable || c == Condition::kPrecondition;
}

// ---- rationals -----------------------------------------------------------

namespace {

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("simplest_between: empty interval");
  if (lo < 0 && hi > 0) return Rational(0);
  if (hi <= 0) return -simplest_between(-hi, -lo);
  Integer fl = floor_of(lo);
  if (fl + 1 < hi) return Rational(fl + 1);
  // (lo, hi) sits inside (fl, fl + 1]; continue on reciprocals of the
  // fractional parts.
  Rational a = lo - fl;
  Rational b = hi - fl;
  if (a == 0) return Rational(fl) + Rational(1) / Rational(floor_of(1 / b) + 1);
  Rational r = simplest_between(1 / b, 1 / a);
  return Rational(fl) + 1 / r;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

// ---- prime field -----------------------------------------------------------

ModP ModP::from_rational(const Rational& q) {
  auto reduce = [](const Integer& z) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), kPrime);
    return ModP::from_raw(r.get_ui());
  };
  ModP den = reduce(q.get_den());
  if (is_zero(den)) throw std::domain_error("denominator vanishes modulo p");
  return reduce(q.get_num()) / den;
}

ModP ModP::inverse() const {
  if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
  ModP result(1);
  ModP b = *this;
  std::uint64_t e = kPrime - 2;
  while (e > 0) {
    if (e & 1U) result = result * b;
    b = b * b;
    e >>= 1U;
  }
  return result;
}

// ---- rational functions ----------------------------------------------------

RatFunc::RatFunc(QPoly num, QPoly den) {
  if (den.is_zero_poly()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero_poly()) {
    den_ = QPoly(1);
    return;
  }
  QPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = exact_quotient(num, g);
    den = exact_quotient(den, g);
  }
  Rational lc = den.lead();
  num_ = num.scaled(1 / lc);
  den_ = den.scaled(1 / lc);
}

Rational RatFunc::evaluate(const Rational& w) const {
  Rational d = den_(w);
  if (is_zero(d)) throw std::domain_error("rational function evaluated at a pole");
  return num_(w) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ + b.num_);
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (is_zero(b)) throw std::domain_error("division by zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string to_string(const QPoly& p, const std::string& var) {
  if (p.is_zero_poly()) return "0";
  std::string out;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (is_zero(c)) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty()) out += mag.get_str();
    else if (mag == 1) out += mono;
    else out += mag.get_str() + "*" + mono;
  }
  return out;
}

std::string to_string(const RatFunc& f, const std::string& var) {
  if (f.is_polynomial()) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

}  // namespace algcon
