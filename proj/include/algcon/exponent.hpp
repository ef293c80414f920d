#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace algcon {

/// Multi-index (b^1, ..., b^n) of a monomial y^b. Entries are non-negative;
/// the total degree is cached.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::size_t nvars) : e_(nvars, 0) {}
  Exponent(std::initializer_list<int> entries);
  explicit Exponent(std::vector<int> entries);

  static Exponent unit(std::size_t nvars, std::size_t var, int power = 1);

  std::size_t size() const { return e_.size(); }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, int value);
  const std::vector<int>& entries() const { return e_; }

  Exponent operator+(const Exponent& o) const;
  /// Componentwise a <= b.
  bool divides(const Exponent& o) const;
  Exponent minus(const Exponent& o) const;
  /// Drops or appends trailing coordinates (appended ones are zero).
  Exponent resized(std::size_t nvars) const;

  friend bool operator==(const Exponent& a, const Exponent& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Exponent& a, const Exponent& b) { return a.e_ != b.e_; }

  std::string to_string() const;

 private:
  std::vector<int> e_;
  int degree_ = 0;
};

/// The local order: compare total degree first, then b^n, b^(n-1), ..., b^1
/// (lexicographic from the right on (b^1, ..., b^n, |b|)). Returns -1, 0, 1.
/// Throws std::invalid_argument on length mismatch.
int local_compare(const Exponent& a, const Exponent& b);

struct LocalOrderLess {
  bool operator()(const Exponent& a, const Exponent& b) const { return local_compare(a, b) < 0; }
};

/// All exponents of total degree exactly d in n variables, ascending local order.
std::vector<Exponent> exponents_of_degree(std::size_t nvars, int d);
/// All exponents of total degree <= d, ascending local order.
std::vector<Exponent> exponents_up_to(std::size_t nvars, int d);

}  // namespace algcon
