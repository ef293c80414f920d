#include "algcon/parser.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "algcon/errors.hpp"

namespace algcon {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  QPolynomial run() {
    skip();
    if (pos_ == s_.size()) throw ParseError(pos_, "empty input");
    QPolynomial p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, unexpected());
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  std::string unexpected() const {
    if (pos_ >= s_.size()) return "unexpected end of input";
    return std::string("unexpected '") + s_[pos_] + "'";
  }

  QPolynomial expr() {
    QPolynomial acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  QPolynomial term() {
    QPolynomial acc = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc *= factor();
      } else if (peek('/')) {
        ++pos_;
        std::size_t at = pos_;
        QPolynomial d = factor();
        if (!d.is_constant() || d.is_zero_poly())
          throw ParseError(at, "divisor must be a nonzero constant");
        acc = acc.scaled(Rational(1) / d.coeff(Exponent(vars_.size())));
      } else {
        skip();
        if (pos_ < s_.size() && (ident_start(s_[pos_]) || std::isdigit(static_cast<unsigned char>(s_[pos_])) ||
                                 s_[pos_] == '('))
          throw ParseError(pos_, "implicit multiplication is not allowed");
        return acc;
      }
    }
  }

  QPolynomial factor() {
    if (peek('-')) {
      ++pos_;
      return -factor();
    }
    if (peek('+')) {
      ++pos_;
      return factor();
    }
    QPolynomial b = base();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t at = pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError(at, "exponent must be a non-negative integer");
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string digits = s_.substr(start, pos_ - start);
      if (digits.size() > 6) throw ParseError(at, "exponent too large");
      unsigned e = static_cast<unsigned>(std::stoul(digits));
      if (peek('^')) throw ParseError(pos_, "chained powers are ambiguous; use parentheses");
      b = pow(b, e);
    }
    return b;
  }

  QPolynomial base() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, unexpected());
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      QPolynomial inner = expr();
      if (!peek(')')) throw ParseError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == '.' || ident_start(s_[pos_])))
        throw ParseError(pos_, s_[pos_] == '.' ? "decimal literals are not supported; write p/q"
                                               : "implicit multiplication is not allowed");
      Rational v(s_.substr(start, pos_ - start));
      return QPolynomial(vars_.size(), v);
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return QPolynomial::variable(vars_.size(), i);
      throw Error("polycore", Condition::kUnknownVariable,
                  "'" + name + "' at position " + std::to_string(start) + " is not declared");
    }
    throw ParseError(pos_, unexpected());
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

QPolynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables) {
  return Parser(text, variables).run();
}

std::vector<std::string> parse_variable_list(const std::string& text) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t a = item.find_first_not_of(" \t");
    std::size_t b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw ParseError(0, "empty variable name in list");
    std::string name = item.substr(a, b - a + 1);
    if (!ident_start(name[0])) throw ParseError(0, "invalid variable name '" + name + "'");
    for (char c : name)
      if (!ident_char(c)) throw ParseError(0, "invalid variable name '" + name + "'");
    if (!seen.insert(name).second) throw ParseError(0, "duplicate variable '" + name + "'");
    out.push_back(name);
  }
  return out;
}

std::string to_string(const QPolynomial& p, const std::vector<std::string>& variables) {
  if (p.is_zero_poly()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variables.at(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace algcon
