#include "algcon/degree.hpp"

#include <string>

namespace algcon {

Signature signature_descartes(const std::vector<int>& s) {
  std::size_t top = s.size();
  while (top > 0 && s[top - 1] == 0) --top;
  if (top == 0) throw Error("degree", Condition::kDegenerateForm, "zero polynomial");
  if (s[0] == 0) throw Error("degree", Condition::kDegenerateForm, "zero constant term");
  int sum = 0;
  std::size_t prev = 0;
  for (std::size_t i = 1; i < top; ++i) {
    if (s[i] == 0) continue;
    if ((prev + i) % 2 == 1) sum += s[prev] * s[i];
    prev = i;
  }
  const int n = static_cast<int>(top) - 1;
  const int parity = (n + 1) % 2 == 0 ? 1 : -1;
  int m = (n + 1 + parity * s[0] * s[top - 1]) % 4;
  if (m < 0) m += 4;
  return {-sum, m};
}

Signature signature_descartes(const UniPoly<Rational>& p) {
  std::vector<int> s;
  for (const auto& c : p.coeffs()) s.push_back(sgn(c));
  return signature_descartes(s);
}

namespace {

// Positive integer multiple of m (common denominator), with the scale.
Matrix<Integer> integer_copy(const Matrix<Rational>& m, Integer& scale) {
  scale = 1;
  for (const auto& row : m)
    for (const auto& v : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
  Matrix<Integer> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& v : m[i]) out[i].push_back(Integer(v.get_num() * (scale / v.get_den())));
  return out;
}

}  // namespace

UniPoly<Rational> char_poly_rational(const Matrix<Rational>& m) {
  Integer scale;
  Matrix<Integer> a = integer_copy(m, scale);
  UniPoly<Integer> p = char_poly(a);
  // det(sA - sL I) = s^n det(A - L I): coefficient of L^i picks up s^(n-i).
  const std::size_t n = m.size();
  std::vector<Rational> c;
  Integer power = 1;
  std::vector<Integer> powers{1};
  for (std::size_t i = 0; i < n; ++i) powers.push_back(powers.back() * scale);
  for (std::size_t i = 0; i <= n; ++i) c.push_back(Rational(p.coeff(static_cast<int>(i))) / Rational(powers[n - i]));
  return UniPoly<Rational>(std::move(c));
}

int matrix_signature(const Matrix<Rational>& m) {
  if (m.empty()) return 0;
  Integer scale;
  UniPoly<Integer> p = char_poly(integer_copy(m, scale));
  std::vector<int> s;
  for (const auto& c : p.coeffs()) s.push_back(sgn(c));
  s.resize(m.size() + 1, 0);
  return signature_descartes(s).value;
}

DegreeReport degree_of_finite_map(const Map& F, const QuotientOptions& qopt) {
  DegreeReport rep;
  QuotientAlgebra<Rational> q = quotient(F, qopt);
  rep.dimension = q.dimension();
  rep.staircase = q.staircase();
  if (q.dimension() == 0) {
    rep.degree = 0;
    return rep;
  }
  rep.lambda = jacobian_socle_coefficient(F, q);
  SymmetricForm<Rational> form = bilinear_matrix(q, rep.lambda);
  Integer scale;
  UniPoly<Integer> p = char_poly(integer_copy(form.matrix, scale));
  std::vector<int> s;
  for (const auto& c : p.coeffs()) s.push_back(sgn(c));
  s.resize(form.matrix.size() + 1, 0);
  if (s[0] == 0)
    throw Error("degree", Condition::kDegenerateForm, "bilinear form is singular (determinant zero)");
  rep.degree = signature_descartes(s).value;
  std::vector<Integer> powers{1};
  const std::size_t n = form.matrix.size();
  for (std::size_t i = 0; i < n; ++i) powers.push_back(powers.back() * scale);
  for (std::size_t i = 0; i <= n; ++i)
    rep.char_poly.push_back(Rational(p.coeff(static_cast<int>(i))) / Rational(powers[n - i]));
  return rep;
}

namespace {

void check_map(const Map& F) {
  if (F.empty()) throw Error("degree", Condition::kPrecondition, "empty map");
  const std::size_t n = F.front().nvars();
  if (F.size() != n)
    throw Error("degree", Condition::kPrecondition,
                "map must have as many components as variables (" + std::to_string(F.size()) + " vs " +
                    std::to_string(n) + ")");
  for (const auto& f : F)
    if (f.nvars() != n) throw Error("degree", Condition::kPrecondition, "component arity mismatch");
}

bool all_nonzero(const Map& F) {
  for (const auto& f : F)
    if (f.is_zero_poly()) return false;
  return true;
}

}  // namespace

DegreeReport local_degree_report(const Map& F, const DegreeOptions& opt) {
  check_map(F);
  if (opt.forced_k) {
    DegreeReport r = degree_of_finite_map(regularize(F, *opt.forced_k), opt.quotient);
    r.k = opt.forced_k;
    return r;
  }
  if (all_nonzero(F)) {
    try {
      return degree_of_finite_map(F, opt.quotient);
    } catch (const Error& e) {
      if (e.condition() != Condition::kNotFiniteDimensional) throw;
    }
  }
  int k0 = 2;
  for (const auto& f : F)
    if (!f.is_zero_poly()) k0 = std::max(k0, f.order() + 1);
  std::optional<DegreeReport> prev;
  for (int k = k0; k <= k0 + opt.k_steps; ++k) {
    DegreeReport r;
    try {
      r = degree_of_finite_map(regularize(F, k), opt.quotient);
    } catch (const Error& e) {
      if (e.condition() != Condition::kNotFiniteDimensional) throw;
      prev.reset();
      continue;
    }
    r.k = k;
    if (prev && prev->degree == r.degree) return r;
    prev = std::move(r);
  }
  throw Error("degree", Condition::kNonStabilizing,
              "regularized degrees did not stabilize for k in [" + std::to_string(k0) + ", " +
                  std::to_string(k0 + opt.k_steps) + "]; the zero is probably not isolated");
}

int local_degree(const Map& F, const DegreeOptions& opt) { return local_degree_report(F, opt).degree; }

}  // namespace algcon
