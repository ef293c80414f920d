#include "algcon/eulerchar.hpp"

#include <random>
#include <string>

namespace algcon {

namespace {

Rational constant_term(const QPolynomial& h) { return h.coeff(Exponent(h.nvars())); }

int degree_of(const Map& F, const ChiOptions& opt) { return local_degree(F, opt.degree); }

QPolynomial top_form(const QPolynomial& h) {
  QPolynomial r(h.nvars());
  const int d = h.degree();
  for (const auto& [e, c] : h.terms())
    if (e.degree() == d) r.add_term(e, c);
  return r;
}

// chi(L) = chi({h <= 0}) + chi({h >= 0}) - chi(S) on a small sphere.
int link_chi(const QPolynomial& h, bool nonnegative, const ChiOptions& opt) {
  const int sphere = sphere_chi(h.nvars());
  const int below = halfset_chi(h, opt);
  const int above = nonnegative ? sphere : halfset_chi(-h, opt);
  return below + above - sphere;
}

void check_arity(const std::vector<QPolynomial>& gens, std::size_t nvars) {
  if (nvars == 0) throw Error("eulerchar", Condition::kPrecondition, "need at least one variable");
  for (const auto& g : gens)
    if (g.nvars() != nvars) throw Error("eulerchar", Condition::kPrecondition, "generator arity mismatch");
}

}  // namespace

int sphere_chi(std::size_t m) { return m % 2 == 1 ? 2 : 0; }

QPolynomial power_sum(std::size_t nvars, int k) {
  QPolynomial r(nvars);
  for (std::size_t i = 0; i < nvars; ++i) r.add_term(Exponent::unit(nvars, i, 2 * k), Rational(1));
  return r;
}

QPolynomial defining_function(const std::vector<QPolynomial>& gens, std::size_t nvars, bool& nonnegative) {
  nonnegative = gens.size() != 1;
  if (gens.empty()) return QPolynomial(nvars);
  if (gens.size() == 1) return gens.front();
  return sum_of_squares(gens);
}

int halfset_chi(const QPolynomial& h, const ChiOptions& opt) {
  const std::size_t m = h.nvars();
  if (h.is_zero_poly()) return sphere_chi(m);
  const int c0 = sgn(constant_term(h));
  if (c0 > 0) return 0;
  if (c0 < 0) return sphere_chi(m);
  auto at = [&](int k) { return 1 - degree_of(gradient(h - power_sum(m, k)), opt); };
  if (opt.forced_k) return at(*opt.forced_k);
  // For homogeneous h of degree e, h - rho with 2k > e is a small deformation
  // on every small sphere; otherwise stabilize over k.
  if (h.is_homogeneous()) return at(h.degree() / 2 + 1);
  const int k0 = h.order() / 2 + 1;
  bool have_prev = false;
  int prev = 0;
  for (int k = k0; k <= k0 + opt.k_steps; ++k) {
    int v = 0;
    try {
      v = at(k);
    } catch (const Error& e) {
      if (e.condition() != Condition::kNonStabilizing) throw;
      have_prev = false;
      continue;
    }
    if (have_prev && prev == v) return v;
    prev = v;
    have_prev = true;
  }
  throw Error("eulerchar", Condition::kNonStabilizing,
              "half-set Euler characteristic did not stabilize for k in [" + std::to_string(k0) + ", " +
                  std::to_string(k0 + opt.k_steps) + "]");
}

int chi_milnor_halfset(const QPolynomial& g, const ChiOptions& opt) {
  if (!is_zero(constant_term(g)))
    throw Error("eulerchar", Condition::kPrecondition, "g must vanish at the origin");
  return 1 - degree_of(gradient(g), opt);
}

int link_at_origin(const std::vector<QPolynomial>& gens, std::size_t nvars, const ChiOptions& opt) {
  check_arity(gens, nvars);
  for (const auto& g : gens)
    if (!is_zero(constant_term(g)))
      throw Error("eulerchar", Condition::kPrecondition, "generator does not vanish at the origin");
  bool nonneg = false;
  QPolynomial h = defining_function(gens, nvars, nonneg);
  return link_chi(h, nonneg, opt);
}

int link_at_infinity(const std::vector<QPolynomial>& gens, std::size_t nvars, const ChiOptions& opt) {
  check_arity(gens, nvars);
  std::vector<QPolynomial> inv;
  for (const auto& g : gens) inv.push_back(inversion_transform(g, std::max(g.degree(), 0)));
  bool nonneg = false;
  QPolynomial h = defining_function(inv, nvars, nonneg);
  return link_chi(h, nonneg, opt);
}

int chi_compact_support(const std::vector<QPolynomial>& gens, std::size_t nvars, const ChiOptions& opt) {
  check_arity(gens, nvars);
  bool nonneg = false;
  QPolynomial h = defining_function(gens, nvars, nonneg);
  // Z = closure of the cone over X in R^{n+1}; its link is two copies of
  // X glued along the link E of the cone over the directions at infinity.
  const QPolynomial cone = homogenize(h, std::max(h.degree(), 0));
  const int lz = link_chi(cone, nonneg, opt);
  const int le = link_chi(top_form(h), nonneg, opt);
  if ((lz - le) % 2 != 0)
    throw std::logic_error("chi_compact_support: odd difference " + std::to_string(lz - le));
  return (lz - le) / 2;
}

int chi_compactified(const std::vector<QPolynomial>& gens, std::size_t nvars, const ChiOptions& opt,
                     CompactChiMethod method) {
  if (method == CompactChiMethod::kCompactification) {
    check_arity(gens, nvars);
    Compactification c = compactify(gens, nvars);
    return chi_from_homogeneous(c.f, 2 * c.p, opt);
  }
  return 1 + chi_compact_support(gens, nvars, opt);
}

int chi_affine(const std::vector<QPolynomial>& gens, std::size_t nvars, const ChiOptions& opt) {
  return chi_compact_support(gens, nvars, opt) + link_at_infinity(gens, nvars, opt);
}

Compactification compactify(const std::vector<QPolynomial>& gens, std::size_t nvars) {
  check_arity(gens, nvars);
  int maxdeg = 0;
  for (const auto& g : gens) maxdeg = std::max(maxdeg, g.degree());
  Compactification out;
  out.p = maxdeg + 1;
  const std::size_t n1 = nvars + 1;
  QPolynomial s(n1);
  for (const auto& g : gens) {
    QPolynomial gl = g.with_nvars(n1);
    s += gl * gl;
  }
  const QPolynomial y = QPolynomial::variable(n1, nvars);
  const QPolynomial one(n1, Rational(1));
  const QPolynomial h = y * y * s + (y - one) * (y - one);
  out.f = homogenize(inversion_transform(h, 2 * out.p), 4 * out.p);
  return out;
}

int chi_from_homogeneous(const QPolynomial& f, int d, const ChiOptions& opt) {
  if (d < 1) throw Error("eulerchar", Condition::kPrecondition, "d must be >= 1");
  if (f.nvars() < 2) throw Error("eulerchar", Condition::kPrecondition, "f needs variables (x, t)");
  if (!f.is_homogeneous() || f.degree() != 2 * d)
    throw Error("eulerchar", Condition::kPrecondition, "f must be homogeneous of degree 2d");
  const std::size_t m = f.nvars() - 1;
  QPolynomial at_infinity(f.nvars());
  for (const auto& [e, c] : f.terms())
    if (e[m] == 0) at_infinity.add_term(e, c);
  if (at_infinity != pow(norm_squared<Rational>(m).with_nvars(f.nvars()), static_cast<unsigned>(d)))
    throw Error("eulerchar", Condition::kPrecondition, "f(x, 0) must equal ||x||^(2d)");
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> dist(-64, 64);
  for (int trial = 0; trial < 200; ++trial) {
    QPolynomial v = f;
    for (std::size_t i = 0; i < f.nvars(); ++i) v = v.substituted(i, Rational(dist(rng), 16));
    if (sgn(constant_term(v)) < 0) throw Error("eulerchar", Condition::kPrecondition, "f takes a negative value");
  }
  QPolynomial g = f - QPolynomial::monomial(Exponent::unit(f.nvars(), m, 2 * d + 1), Rational(1));
  return 1 - degree_of(gradient(g), opt);
}

}  // namespace algcon
