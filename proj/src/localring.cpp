#include "algcon/localring.hpp"

#include <cstdlib>
#include <string>

namespace algcon {

MonomialIndex::MonomialIndex(std::size_t nvars, int max_degree)
    : nvars_(nvars), max_degree_(max_degree), list_(exponents_up_to(nvars, max_degree)) {}

std::size_t MonomialIndex::binom(int a, int b) const {
  if (b < 0 || a < b) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= b; ++i) r = r * static_cast<std::size_t>(a - b + i) / static_cast<std::size_t>(i);
  return r;
}

std::size_t MonomialIndex::count_up_to(std::size_t nvars, int d) {
  if (d < 0) return 0;
  // C(d + n, n)
  std::size_t r = 1;
  for (std::size_t i = 1; i <= nvars; ++i) r = r * (static_cast<std::size_t>(d) + i) / i;
  return r;
}

std::size_t MonomialIndex::level_start(int d) const { return count_up_to(nvars_, d - 1); }

std::size_t MonomialIndex::rank(const Exponent& e) const {
  const int d = e.degree();
  std::size_t r = level_start(d);
  int rem = d;
  // Within a level the order is lexicographic on (b^n, b^(n-1), ..., b^2).
  for (std::size_t i = nvars_; i-- > 1;) {
    const int m = static_cast<int>(i);  // variables left below position i
    for (int v = 0; v < e[i]; ++v) r += binom(rem - v + m - 1, m - 1);
    rem -= e[i];
  }
  return r;
}

namespace detail {

Staircase staircase_from_pivots(const std::vector<bool>& pivots, const MonomialIndex& idx) {
  Staircase st;
  const int N = idx.max_degree();
  const std::size_t n = idx.nvars();
  st.truncation_degree = N;
  for (int d = 0; d <= N; ++d) {
    bool full = true;
    for (std::size_t c = idx.level_start(d); c < idx.level_start(d + 1); ++c) {
      if (!pivots[c]) {
        full = false;
        break;
      }
    }
    if (full) {
      st.certified = true;
      st.full_level = d;
      break;
    }
  }
  const int top = st.certified ? st.full_level : N;
  const std::size_t end = st.certified ? idx.level_start(top) : idx.size();
  for (std::size_t c = 0; c < end; ++c)
    if (!pivots[c]) st.delta.push_back(idx.at(c));
  for (std::size_t c = 0; c < idx.level_start(top + 1); ++c) {
    if (!pivots[c]) continue;
    const Exponent& e = idx.at(c);
    bool minimal = true;
    for (std::size_t i = 0; i < n && minimal; ++i) {
      if (e[i] == 0) continue;
      Exponent f = e;
      f.set(i, e[i] - 1);
      if (pivots[idx.rank(f)]) minimal = false;
    }
    if (minimal) st.vertices.push_back(e);
  }
  st.socle = st.delta.empty() ? Exponent(n) : st.delta.back();
  return st;
}

int initial_truncation(int max_degree, int cap) { return std::max(1, std::min(max_degree, cap)); }

int next_truncation(int N, int cap) { return std::min(2 * N, cap); }

void throw_not_finite(int N, std::size_t columns, bool budget) {
  std::string msg = "no full degree level in the initial diagram up to truncation degree " +
                    std::to_string(N);
  if (budget) msg += " (" + std::to_string(columns) + " monomials exceed the column budget)";
  msg += "; either the zero is not algebraically isolated or the truncation cap is too low";
  throw Error("localring", Condition::kNotFiniteDimensional, msg);
}

namespace {

ModP eval_mod_p(const QPoly& p, ModP w) {
  ModP acc = ModP::from_rational(Rational(0));
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * w + ModP::from_rational(*it);
  return acc;
}

}  // namespace

ModP probe_value(const RatFunc& c) {
  // Fixed parameter value for the modular probe of Q(w) systems.
  const ModP w = ModP::from_rational(Rational(Integer(1009), Integer(97)));
  const ModP d = eval_mod_p(c.den(), w);
  if (is_zero(d)) throw std::domain_error("probe parameter is a pole");
  return eval_mod_p(c.num(), w) / d;
}

}  // namespace detail

QuotientOptions QuotientOptions::from_environment() {
  QuotientOptions o;
  if (const char* v = std::getenv("ALGCON_TRUNCATION_CAP")) {
    char* end = nullptr;
    long cap = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && cap > 0 && cap <= 4096) o.cap = static_cast<int>(cap);
  }
  return o;
}

}  // namespace algcon
