#pragma once

#include <string>
#include <vector>

#include "algcon/cfun.hpp"
#include "algcon/errors.hpp"
#include "algcon/oracle.hpp"
#include "algcon/parser.hpp"

namespace algcon::test {

inline QPolynomial P(const std::string& text, const std::string& vars) {
  return parse_polynomial(text, parse_variable_list(vars));
}

inline std::vector<QPolynomial> Ps(const std::vector<std::string>& texts, const std::string& vars) {
  std::vector<QPolynomial> out;
  for (const auto& t : texts) out.push_back(P(t, vars));
  return out;
}

/// Univariate polynomial in w.
inline QPoly U(const std::string& text) { return to_unipoly(P(text, "w"), 0); }

inline SumOfSigns S(const std::vector<std::string>& texts) {
  SumOfSigns s;
  for (const auto& t : texts) s.polys.push_back(U(t));
  return s;
}

}  // namespace algcon::test
