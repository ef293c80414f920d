#pragma once

#include <cstdint>
#include <stdexcept>

#include "algcon/rational.hpp"

namespace algcon {

/// Arithmetic in the prime field F_p, p = 2^61 - 1. Used only for fast
/// structural probes (staircase shape, truncation degree); every reported
/// result is recomputed over the exact field.
class ModP {
 public:
  static constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

  ModP() = default;
  ModP(int c) : v_(reduce_signed(c)) {}  // NOLINT
  static ModP from_raw(std::uint64_t v) {
    ModP m;
    m.v_ = v % kPrime;
    return m;
  }
  /// Throws std::domain_error when the denominator vanishes mod p.
  static ModP from_rational(const Rational& q);

  std::uint64_t value() const { return v_; }

  friend ModP operator+(ModP a, ModP b) {
    std::uint64_t s = a.v_ + b.v_;
    if (s >= kPrime) s -= kPrime;
    return from_reduced(s);
  }
  friend ModP operator-(ModP a, ModP b) {
    return from_reduced(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + kPrime - b.v_);
  }
  ModP operator-() const { return from_reduced(v_ == 0 ? 0 : kPrime - v_); }
  friend ModP operator*(ModP a, ModP b) {
    unsigned __int128 prod = static_cast<unsigned __int128>(a.v_) * b.v_;
    std::uint64_t lo = static_cast<std::uint64_t>(prod & kPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
    std::uint64_t s = lo + hi;
    if (s >= kPrime) s -= kPrime;
    if (s >= kPrime) s -= kPrime;
    return from_reduced(s);
  }
  ModP inverse() const;
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }
  friend bool operator!=(ModP a, ModP b) { return a.v_ != b.v_; }

 private:
  static ModP from_reduced(std::uint64_t v) {
    ModP m;
    m.v_ = v;
    return m;
  }
  static std::uint64_t reduce_signed(long long c) {
    long long r = c % static_cast<long long>(kPrime);
    if (r < 0) r += static_cast<long long>(kPrime);
    return static_cast<std::uint64_t>(r);
  }

  std::uint64_t v_ = 0;
};

inline bool is_zero(ModP a) { return a.value() == 0; }

}  // namespace algcon
