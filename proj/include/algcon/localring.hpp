#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algcon/errors.hpp"
#include "algcon/exponent.hpp"
#include "algcon/modp.hpp"
#include "algcon/polynomial.hpp"
#include "algcon/ratfunc.hpp"

namespace algcon {

/// Dense ranking of all exponents of total degree <= N in ascending local order.
class MonomialIndex {
 public:
  MonomialIndex(std::size_t nvars, int max_degree);

  std::size_t nvars() const { return nvars_; }
  int max_degree() const { return max_degree_; }
  std::size_t size() const { return list_.size(); }
  const Exponent& at(std::size_t i) const { return list_[i]; }
  /// Number of exponents of degree < d.
  std::size_t level_start(int d) const;
  std::size_t rank(const Exponent& e) const;

  static std::size_t count_up_to(std::size_t nvars, int d);

 private:
  std::size_t binom(int a, int b) const;

  std::size_t nvars_;
  int max_degree_;
  std::vector<Exponent> list_;
};

struct Staircase {
  std::vector<Exponent> delta;     // ascending local order
  std::vector<Exponent> vertices;  // minimal generators of N(I), ascending
  Exponent socle;                  // max of delta; meaningless when delta is empty
  int truncation_degree = 0;
  bool certified = false;
  int full_level = -1;             // least d <= N with the whole level in N(I)
};

struct QuotientOptions {
  int cap = 64;                    // largest truncation degree tried
  std::size_t max_columns = 40000; // monomial budget per truncation
  bool modp_probe = true;          // locate the certifying level in F_p first

  /// Defaults, with the cap overridable through ALGCON_TRUNCATION_CAP.
  static QuotientOptions from_environment();
};

template <class K>
using SparseRow = std::vector<std::pair<std::uint32_t, K>>;

/// Incremental row echelon form where each row is normalized to leading
/// entry 1 and the leading column is the smallest column in its support.
template <class K>
class Echelon {
 public:
  explicit Echelon(std::size_t ncols) : pivot_of_(ncols, -1) {}

  /// Reduces `row` against the stored pivots and stores it when it survives.
  /// Returns the new pivot column, or nullopt when the row reduced to zero.
  std::optional<std::uint32_t> insert(SparseRow<K> row) {
    while (!row.empty()) {
      const std::uint32_t c = row.front().first;
      const int p = pivot_of_[c];
      if (p < 0) {
        if (on_pivot) on_pivot(row.front().second);
        K inv = K(1) / row.front().second;
        row.front().second = K(1);
        for (std::size_t i = 1; i < row.size(); ++i) row[i].second = row[i].second * inv;
        pivot_of_[c] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        return c;
      }
      K factor = row.front().second;
      row = axpy_tail(row, factor, rows_[static_cast<std::size_t>(p)]);
    }
    return std::nullopt;
  }

  bool is_pivot(std::size_t c) const { return pivot_of_[c] >= 0; }
  const SparseRow<K>& pivot_row(std::size_t c) const {
    return rows_[static_cast<std::size_t>(pivot_of_[c])];
  }
  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return pivot_of_.size(); }

  /// Observer for the raw leading coefficient of every new pivot (before
  /// normalization).
  std::function<void(const K&)> on_pivot;

 private:
  // a - f * b, where a and b share the leading column (which cancels).
  static SparseRow<K> axpy_tail(const SparseRow<K>& a, const K& f, const SparseRow<K>& b) {
    SparseRow<K> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 1, j = 1;
    while (i < a.size() || j < b.size()) {
      if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i >= a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, -(f * b[j].second));
        ++j;
      } else {
        K v = a[i].second - f * b[j].second;
        if (!is_zero(v)) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<int> pivot_of_;
  std::vector<SparseRow<K>> rows_;
};

namespace detail {

template <class K>
SparseRow<K> truncated_row(const Polynomial<K>& g, const Exponent& shift, int N, const MonomialIndex& idx) {
  SparseRow<K> row;
  for (const auto& [e, c] : g.terms()) {
    if (e.degree() + shift.degree() > N) break;  // terms are in ascending local order
    row.emplace_back(static_cast<std::uint32_t>(idx.rank(e + shift)), c);
  }
  return row;
}

/// Row-reduces the truncated Macaulay system of the generators at degree N.
template <class K>
Echelon<K> macaulay_echelon(const std::vector<Polynomial<K>>& gens, int N, const MonomialIndex& idx,
                            std::function<void(const K&)> on_pivot = {}) {
  const std::size_t n = idx.nvars();
  struct Job {
    std::size_t lead;
    std::size_t gen;
    Exponent shift;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero_poly()) continue;
    const int o = gens[i].order();
    if (o > N) continue;
    for (const Exponent& a : exponents_up_to(n, N - o))
      jobs.push_back({idx.rank(a + gens[i].nu()), i, a});
  }
  std::stable_sort(jobs.begin(), jobs.end(), [](const Job& x, const Job& y) { return x.lead < y.lead; });
  Echelon<K> ech(idx.size());
  ech.on_pivot = std::move(on_pivot);
  for (const Job& j : jobs) ech.insert(truncated_row(gens[j.gen], j.shift, N, idx));
  return ech;
}

/// Reads the staircase off a pivot set at truncation N.
Staircase staircase_from_pivots(const std::vector<bool>& pivots, const MonomialIndex& idx);

}  // namespace detail

/// Pivot structure of the truncated system; Delta is exact when certified.
template <class K>
Staircase staircase_at_truncation(const std::vector<Polynomial<K>>& gens, int N) {
  if (gens.empty()) throw Error("localring", Condition::kPrecondition, "no generators");
  const std::size_t n = gens.front().nvars();
  for (const auto& g : gens) {
    if (g.is_zero_poly()) throw Error("localring", Condition::kPrecondition, "zero generator");
    if (g.nvars() != n) throw Error("localring", Condition::kPrecondition, "generator arity mismatch");
  }
  if (N < 0) throw Error("localring", Condition::kPrecondition, "negative truncation degree");
  MonomialIndex idx(n, N);
  Echelon<K> ech = detail::macaulay_echelon(gens, N, idx);
  std::vector<bool> piv(idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c) piv[c] = ech.is_pivot(c);
  return detail::staircase_from_pivots(piv, idx);
}

/// Certified local algebra Q = K[[y]]/I with a normal-form table.
template <class K>
class QuotientAlgebra {
 public:
  QuotientAlgebra(std::vector<Polynomial<K>> gens, const Echelon<K>& ech, const MonomialIndex& idx,
                  Staircase st)
      : gens_(std::move(gens)), st_(std::move(st)), nvars_(idx.nvars()) {
    const int d0 = st_.full_level;
    limit_ = idx.level_start(d0);
    delta_pos_.assign(limit_, -1);
    for (std::size_t k = 0; k < st_.delta.size(); ++k)
      delta_pos_[idx.rank(st_.delta[k])] = static_cast<int>(k);
    table_.resize(limit_);
    // Descending pass: each pivot row expresses its leading monomial through
    // larger monomials, whose normal forms are already known.
    std::vector<K> acc(st_.delta.size(), K(0));
    for (std::size_t c = limit_; c-- > 0;) {
      if (delta_pos_[c] >= 0) {
        table_[c] = {{static_cast<std::uint32_t>(delta_pos_[c]), K(1)}};
        continue;
      }
      const SparseRow<K>& row = ech.pivot_row(c);
      std::vector<std::uint32_t> touched;
      for (std::size_t t = 1; t < row.size(); ++t) {
        const std::size_t c2 = row[t].first;
        if (c2 >= limit_) break;
        for (const auto& [k, v] : table_[c2]) {
          if (is_zero(acc[k])) touched.push_back(k);
          acc[k] = acc[k] - row[t].second * v;
        }
      }
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      SparseRow<K> nf;
      for (std::uint32_t k : touched) {
        if (!is_zero(acc[k])) nf.emplace_back(k, acc[k]);
        acc[k] = K(0);
      }
      table_[c] = std::move(nf);
    }
    ranks_ = std::make_shared<MonomialIndex>(nvars_, std::max(d0 - 1, 0));
  }

  const Staircase& staircase() const { return st_; }
  const std::vector<Polynomial<K>>& generators() const { return gens_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t dimension() const { return st_.delta.size(); }

  /// Coordinates over Delta of the class of y^e.
  const SparseRow<K>* monomial_nf(const Exponent& e) const {
    if (e.degree() >= st_.full_level) return nullptr;
    return &table_[ranks_->rank(e)];
  }

  std::vector<K> normal_form(const Polynomial<K>& f) const {
    std::vector<K> out(dimension(), K(0));
    for (const auto& [e, c] : f.terms()) {
      const SparseRow<K>* nf = monomial_nf(e);
      if (!nf) break;
      for (const auto& [k, v] : *nf) out[k] = out[k] + c * v;
    }
    return out;
  }

  Polynomial<K> as_polynomial(const std::vector<K>& v) const {
    Polynomial<K> p(nvars_);
    for (std::size_t k = 0; k < v.size(); ++k) p.add_term(st_.delta[k], v[k]);
    return p;
  }

  std::vector<K> multiply(const std::vector<K>& a, const std::vector<K>& b) const {
    return normal_form(as_polynomial(a) * as_polynomial(b));
  }

  /// Coefficient of the socle monomial in NF(y^e).
  K socle_coefficient(const Exponent& e) const {
    const SparseRow<K>* nf = monomial_nf(e);
    if (!nf || nf->empty()) return K(0);
    const auto& last = nf->back();
    return last.first + 1 == dimension() ? last.second : K(0);
  }

 private:
  std::vector<Polynomial<K>> gens_;
  Staircase st_;
  std::size_t nvars_;
  std::size_t limit_ = 0;
  std::vector<int> delta_pos_;
  std::vector<SparseRow<K>> table_;
  std::shared_ptr<MonomialIndex> ranks_;
};

namespace detail {

inline ModP probe_value(const Rational& q) { return ModP::from_rational(q); }
inline ModP probe_value(const ModP& q) { return q; }
/// Q(w) coefficients are read at a fixed parameter value; throws
/// std::domain_error when that value is a pole.
ModP probe_value(const RatFunc& c);

template <class K>
std::vector<Polynomial<ModP>> probe_generators(const std::vector<Polynomial<K>>& gens) {
  std::vector<Polynomial<ModP>> out;
  for (const auto& g : gens) out.push_back(g.map_coefficients([](const K& c) { return probe_value(c); }));
  return out;
}

int initial_truncation(int max_degree, int cap);
int next_truncation(int N, int cap);
[[noreturn]] void throw_not_finite(int N, std::size_t columns, bool budget);

}  // namespace detail

/// Builds the certified quotient, growing the truncation degree until a full
/// degree level lies in the initial diagram. A probe over F_p locates that
/// level first; the exact run then certifies on its own.
template <class K>
QuotientAlgebra<K> quotient(const std::vector<Polynomial<K>>& gens, const QuotientOptions& opt,
                            std::function<void(const K&)> on_pivot = {}) {
  if (gens.empty()) throw Error("localring", Condition::kPrecondition, "no generators");
  const std::size_t n = gens.front().nvars();
  int maxdeg = 0;
  for (const auto& g : gens) {
    if (g.is_zero_poly()) throw Error("localring", Condition::kPrecondition, "zero generator");
    if (g.nvars() != n) throw Error("localring", Condition::kPrecondition, "generator arity mismatch");
    maxdeg = std::max(maxdeg, g.degree());
  }
  int N = detail::initial_truncation(maxdeg, opt.cap);
  if (opt.modp_probe) {
    std::optional<std::vector<Polynomial<ModP>>> pg;
    try {
      pg = detail::probe_generators(gens);
    } catch (const std::domain_error&) {
      pg.reset();
    }
    if (pg) {
      for (;;) {
        const std::size_t cols = MonomialIndex::count_up_to(n, N);
        if (cols > opt.max_columns) detail::throw_not_finite(N, cols, true);
        Staircase st = staircase_at_truncation(*pg, N);
        if (st.certified) {
          N = std::max(st.full_level, 0);
          break;
        }
        if (N >= opt.cap) detail::throw_not_finite(N, cols, false);
        N = detail::next_truncation(N, opt.cap);
      }
    }
  }
  for (;;) {
    const std::size_t cols = MonomialIndex::count_up_to(n, N);
    if (cols > opt.max_columns) detail::throw_not_finite(N, cols, true);
    MonomialIndex idx(n, N);
    Echelon<K> ech = detail::macaulay_echelon(gens, N, idx, on_pivot);
    std::vector<bool> piv(idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c) piv[c] = ech.is_pivot(c);
    Staircase st = detail::staircase_from_pivots(piv, idx);
    if (st.certified) return QuotientAlgebra<K>(gens, ech, idx, std::move(st));
    if (N >= opt.cap) detail::throw_not_finite(N, cols, false);
    N = detail::next_truncation(N, opt.cap);
  }
}

template <class K>
std::vector<K> normal_form(const Polynomial<K>& f, const QuotientAlgebra<K>& q) {
  return q.normal_form(f);
}

template <class K>
std::vector<K> multiply(const std::vector<K>& a, const std::vector<K>& b, const QuotientAlgebra<K>& q) {
  return q.multiply(a, b);
}

}  // namespace algcon
