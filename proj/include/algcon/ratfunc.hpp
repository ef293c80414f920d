#pragma once

#include <string>

#include "algcon/unipoly.hpp"

namespace algcon {

using QPoly = UniPoly<Rational>;

/// Element of the rational function field Q(w) in one parameter, kept in
/// lowest terms with a monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(int c) : num_(Rational(c)), den_(1) {}        // NOLINT
  RatFunc(const Rational& c) : num_(c), den_(1) {}      // NOLINT
  RatFunc(QPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  RatFunc(QPoly num, QPoly den);

  static RatFunc parameter() { return RatFunc(QPoly::x()); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }

  /// Value at a rational parameter; throws std::domain_error at a pole.
  Rational evaluate(const Rational& w) const;

  RatFunc operator-() const { return RatFunc(-num_, den_, /*normalized=*/true); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

 private:
  RatFunc(QPoly num, QPoly den, bool /*normalized*/) : num_(std::move(num)), den_(std::move(den)) {}

  QPoly num_;
  QPoly den_;
};

inline bool is_zero(const RatFunc& f) { return f.num().is_zero_poly(); }

/// Renders a univariate rational polynomial in the named variable, canonical
/// ascending-degree order, e.g. "-2 + w^2".
std::string to_string(const QPoly& p, const std::string& var);
std::string to_string(const RatFunc& f, const std::string& var);

}  // namespace algcon
