#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algcon/rational.hpp"

namespace algcon {

/// Dense univariate polynomial a_0 + a_1 x + ... + a_N x^N over a commutative
/// ring R. The coefficient vector never carries a zero leading coefficient.
template <class R>
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(int c) : UniPoly(R(c)) {}  // NOLINT: implicit by design of ring types
  UniPoly(const R& c) {              // NOLINT
    if (!is_zero(c)) coeffs_.push_back(c);
  }
  explicit UniPoly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<R> coeffs) : coeffs_(coeffs) { trim(); }

  static UniPoly monomial(const R& c, int degree) {
    if (is_zero(c)) return UniPoly();
    std::vector<R> v(static_cast<std::size_t>(degree) + 1, R(0));
    v.back() = c;
    return UniPoly(std::move(v));
  }
  static UniPoly x() { return monomial(R(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero_poly() const { return coeffs_.empty(); }
  const std::vector<R>& coeffs() const { return coeffs_; }
  R coeff(int i) const {
    if (i < 0 || i > degree()) return R(0);
    return coeffs_[static_cast<std::size_t>(i)];
  }
  const R& lead() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }
  bool is_constant() const { return coeffs_.size() <= 1; }

  R operator()(const R& x) const {
    R acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x;
      acc = acc + *it;
    }
    return acc;
  }

  UniPoly derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<R> v;
    v.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v.push_back(R(static_cast<int>(i)) * coeffs_[i]);
    return UniPoly(std::move(v));
  }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  UniPoly& operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), R(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return UniPoly();
    std::vector<R> v(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return UniPoly(std::move(v));
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  UniPoly scaled(const R& c) const {
    std::vector<R> v;
    v.reserve(coeffs_.size());
    for (const auto& a : coeffs_) v.push_back(a * c);
    return UniPoly(std::move(v));
  }
  /// p(x) -> p(-x)
  UniPoly reflected() const {
    UniPoly r = *this;
    for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
    return r;
  }
  /// p(x) -> x^deg p(1/x)
  UniPoly reversed() const {
    std::vector<R> v(coeffs_.rbegin(), coeffs_.rend());
    return UniPoly(std::move(v));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

 private:
  void trim() {
    while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

template <class R>
bool is_zero(const UniPoly<R>& p) {
  return p.is_zero_poly();
}

template <class R>
UniPoly<R> pow(const UniPoly<R>& base, unsigned e) {
  UniPoly<R> result(R(1));
  UniPoly<R> b = base;
  while (e > 0) {
    if (e & 1U) result = result * b;
    e >>= 1U;
    if (e > 0) b = b * b;
  }
  return result;
}

/// p(q(x)) by Horner.
template <class R>
UniPoly<R> compose(const UniPoly<R>& p, const UniPoly<R>& q) {
  UniPoly<R> acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * q + UniPoly<R>(*it);
  return acc;
}

// ---- Field-only operations ------------------------------------------------

template <class K>
std::pair<UniPoly<K>, UniPoly<K>> divmod(const UniPoly<K>& a, const UniPoly<K>& b) {
  if (b.is_zero_poly()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly<K>(), a};
  std::vector<K> rem = a.coeffs();
  std::vector<K> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), K(0));
  const K inv_lead = K(1) / b.lead();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const K& top = rem[static_cast<std::size_t>(i)];
    if (is_zero(top)) continue;
    K q = top * inv_lead;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - db + j)];
      slot = slot - q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    quo[static_cast<std::size_t>(i - db)] = q;
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly<K>(std::move(quo)), UniPoly<K>(std::move(rem))};
}

template <class K>
UniPoly<K> operator%(const UniPoly<K>& a, const UniPoly<K>& b) {
  return divmod(a, b).second;
}

template <class K>
UniPoly<K> exact_quotient(const UniPoly<K>& a, const UniPoly<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero_poly()) throw std::domain_error("inexact polynomial division");
  return q;
}

template <class K>
UniPoly<K> monic(const UniPoly<K>& p) {
  if (p.is_zero_poly()) return p;
  return p.scaled(K(1) / p.lead());
}

/// Monic gcd; gcd(0, 0) = 0.
template <class K>
UniPoly<K> gcd(UniPoly<K> a, UniPoly<K> b) {
  while (!b.is_zero_poly()) {
    UniPoly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <class K>
UniPoly<K> squarefree_part(const UniPoly<K>& p) {
  if (p.degree() <= 0) return p.is_zero_poly() ? p : UniPoly<K>(K(1));
  return monic(exact_quotient(p, gcd(p, p.derivative())));
}

}  // namespace algcon
