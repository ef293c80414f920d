#include "algcon/exponent.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace algcon {

Exponent::Exponent(std::initializer_list<int> entries) : Exponent(std::vector<int>(entries)) {}

Exponent::Exponent(std::vector<int> entries) : e_(std::move(entries)) {
  for (int v : e_) {
    if (v < 0) throw std::invalid_argument("negative exponent entry");
    degree_ += v;
  }
}

Exponent Exponent::unit(std::size_t nvars, std::size_t var, int power) {
  Exponent e(nvars);
  e.set(var, power);
  return e;
}

void Exponent::set(std::size_t i, int value) {
  if (value < 0) throw std::invalid_argument("negative exponent entry");
  degree_ += value - e_[i];
  e_[i] = value;
}

Exponent Exponent::operator+(const Exponent& o) const {
  if (o.size() != size()) throw std::invalid_argument("exponent length mismatch");
  Exponent r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  r.degree_ = degree_ + o.degree_;
  return r;
}

bool Exponent::divides(const Exponent& o) const {
  if (o.size() != size()) throw std::invalid_argument("exponent length mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Exponent Exponent::minus(const Exponent& o) const {
  if (!o.divides(*this)) throw std::invalid_argument("exponent subtraction underflow");
  Exponent r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  r.degree_ = degree_ - o.degree_;
  return r;
}

Exponent Exponent::resized(std::size_t nvars) const {
  std::vector<int> v(nvars, 0);
  for (std::size_t i = 0; i < std::min(nvars, e_.size()); ++i) v[i] = e_[i];
  return Exponent(std::move(v));
}

std::string Exponent::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e_[i]);
  }
  return s + ")";
}

int local_compare(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw std::invalid_argument("local_compare: exponent length mismatch");
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

namespace {

void enumerate(std::size_t nvars, std::size_t pos, int remaining, std::vector<int>& cur,
               std::vector<Exponent>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    cur[pos] = v;
    enumerate(nvars, pos + 1, remaining - v, cur, out);
  }
}

}  // namespace

std::vector<Exponent> exponents_of_degree(std::size_t nvars, int d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> cur(nvars, 0);
  enumerate(nvars, 0, d, cur, out);
  std::sort(out.begin(), out.end(), LocalOrderLess{});
  return out;
}

std::vector<Exponent> exponents_up_to(std::size_t nvars, int d) {
  std::vector<Exponent> out;
  for (int k = 0; k <= d; ++k) {
    auto level = exponents_of_degree(nvars, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace algcon
