#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algcon/exponent.hpp"
#include "algcon/rational.hpp"

namespace algcon {

/// Multivariate polynomial in a fixed number of variables over a field K,
/// stored as exponent -> coefficient in ascending local order. Zero
/// coefficients are never stored.
template <class K>
class Polynomial {
 public:
  using Terms = std::map<Exponent, K, LocalOrderLess>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  Polynomial(std::size_t nvars, const K& c) : nvars_(nvars) {
    if (!is_zero(c)) terms_.emplace(Exponent(nvars), c);
  }

  static Polynomial constant(std::size_t nvars, const K& c) { return Polynomial(nvars, c); }
  static Polynomial monomial(const Exponent& e, const K& c) {
    Polynomial p(e.size());
    if (!is_zero(c)) p.terms_.emplace(e, c);
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t i) {
    return monomial(Exponent::unit(nvars, i), K(1));
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero_poly() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  K coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K(0) : it->second;
  }
  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
    return d;
  }
  /// Lowest total degree among the terms; -1 for zero.
  int order() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
  bool is_constant() const { return degree() <= 0; }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    return order() == degree();
  }

  void add_term(const Exponent& e, const K& c) {
    if (e.size() != nvars_) throw std::invalid_argument("term arity mismatch");
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_arity(b);
    Polynomial r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const K& c) const {
    if (is_zero(c)) return Polynomial(nvars_);
    Polynomial r = *this;
    for (auto& [e, v] : r.terms_) v = v * c;
    return r;
  }
  Polynomial shifted(const Exponent& m) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + m, c);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Exponent of the local-order-minimal term. Throws on zero.
  const Exponent& nu() const {
    if (terms_.empty()) throw std::domain_error("nu of the zero polynomial");
    return terms_.begin()->first;
  }
  /// Drops every term of total degree > n.
  Polynomial truncated(int n) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_)
      if (e.degree() <= n) r.terms_.emplace_hint(r.terms_.end(), e, c);
    return r;
  }
  Polynomial derivative(std::size_t var) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponent f = e;
      f.set(var, e[var] - 1);
      r.add_term(f, c * K(e[var]));
    }
    return r;
  }
  /// Appends or drops trailing variables. Dropping requires those variables
  /// to be absent.
  Polynomial with_nvars(std::size_t n) const {
    Polynomial r(n);
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = n; i < e.size(); ++i)
        if (e[i] != 0) throw std::invalid_argument("with_nvars: dropped variable occurs");
      r.add_term(e.resized(n), c);
    }
    return r;
  }
  /// Sets variable `var` to the constant value; arity unchanged.
  Polynomial substituted(std::size_t var, const K& value) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
      K v = c;
      for (int i = 0; i < e[var]; ++i) v = v * value;
      Exponent f = e;
      f.set(var, 0);
      r.add_term(f, v);
    }
    return r;
  }
  template <class Fn>
  auto map_coefficients(Fn fn) const {
    using L = decltype(fn(std::declval<K>()));
    Polynomial<L> r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
    return r;
  }

 private:
  void check_arity(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial arity mismatch");
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

template <class K>
bool is_zero(const Polynomial<K>& p) {
  return p.is_zero_poly();
}

template <class K>
Polynomial<K> pow(const Polynomial<K>& base, unsigned e) {
  Polynomial<K> result(base.nvars(), K(1));
  Polynomial<K> b = base;
  while (e > 0) {
    if (e & 1U) result = result * b;
    e >>= 1U;
    if (e > 0) b = b * b;
  }
  return result;
}

template <class K>
std::vector<Polynomial<K>> gradient(const Polynomial<K>& f) {
  std::vector<Polynomial<K>> out;
  out.reserve(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) out.push_back(f.derivative(i));
  return out;
}

template <class K>
Polynomial<K> sum_of_squares(const std::vector<Polynomial<K>>& gens) {
  if (gens.empty()) throw std::invalid_argument("sum_of_squares: empty generator list");
  Polynomial<K> r(gens.front().nvars());
  for (const auto& g : gens) r += g * g;
  return r;
}

/// ||y||^2 in n variables.
template <class K>
Polynomial<K> norm_squared(std::size_t nvars) {
  Polynomial<K> r(nvars);
  for (std::size_t i = 0; i < nvars; ++i) r.add_term(Exponent::unit(nvars, i, 2), K(1));
  return r;
}

/// Homogenizes to degree d in a new trailing variable. Throws when deg f > d.
template <class K>
Polynomial<K> homogenize(const Polynomial<K>& f, int d) {
  if (f.degree() > d) throw std::invalid_argument("homogenize: degree exceeds target");
  const std::size_t n = f.nvars();
  Polynomial<K> r(n + 1);
  for (const auto& [e, c] : f.terms()) {
    Exponent g = e.resized(n + 1);
    g.set(n, d - e.degree());
    r.add_term(g, c);
  }
  return r;
}

/// ||y||^{2d} f(y/||y||^2): each term c*m of degree e maps to c*||y||^{2d-2e}*m.
/// Requires d >= deg f.
template <class K>
Polynomial<K> inversion_transform(const Polynomial<K>& f, int d) {
  if (f.degree() > d) throw std::invalid_argument("inversion_transform: need d >= deg f");
  const std::size_t n = f.nvars();
  const Polynomial<K> r2 = norm_squared<K>(n);
  std::vector<Polynomial<K>> powers{Polynomial<K>(n, K(1))};
  Polynomial<K> out(n);
  for (const auto& [e, c] : f.terms()) {
    const int k = d - e.degree();
    while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * r2);
    out += powers[static_cast<std::size_t>(k)].shifted(e).scaled(c);
  }
  return out;
}

/// Determinant by cofactor expansion along the first row; for Jacobians of
/// small maps.
template <class K>
Polynomial<K> determinant(const std::vector<std::vector<Polynomial<K>>>& m, std::size_t nvars) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial<K>(nvars, K(1));
  if (n == 1) return m[0][0];
  Polynomial<K> acc(nvars);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero_poly()) continue;
    std::vector<std::vector<Polynomial<K>>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial<K>> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Polynomial<K> term = m[0][j] * determinant(minor, nvars);
    if (j % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc;
}

template <class K>
Polynomial<K> jacobian_determinant(const std::vector<Polynomial<K>>& map) {
  if (map.empty()) throw std::invalid_argument("jacobian of an empty map");
  const std::size_t n = map.front().nvars();
  if (map.size() != n) throw std::invalid_argument("jacobian needs a square map");
  std::vector<std::vector<Polynomial<K>>> m;
  for (const auto& f : map) m.push_back(gradient(f));
  return determinant(m, n);
}

using QPolynomial = Polynomial<Rational>;

}  // namespace algcon
