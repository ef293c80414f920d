// algcon: batch front end. See README.md for the flag grammar and the output schema.
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "algcon/cfun.hpp"
#include "algcon/degree.hpp"
#include "algcon/errors.hpp"
#include "algcon/eulerchar.hpp"
#include "algcon/oracle.hpp"
#include "algcon/paramfamily.hpp"
#include "algcon/parser.hpp"
#include "json.hpp"

using namespace algcon;
using Json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "algcon/1";

struct Result {
  Json fields = Json::object();
  std::string text;
};

// ---- input ---------------------------------------------------------------

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\n");
  return s.substr(a, b - a + 1);
}

// Each argument may hold several comma-separated polynomials, optionally
// wrapped in brackets: "[w, 1]" or "w,1". "[]" is the empty list.
std::vector<std::string> split_list(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& raw : args) {
    std::string s = trim(raw);
    if (!s.empty() && s.front() == '[') {
      if (s.back() != ']') throw Error("cli", Condition::kParseError, "unbalanced bracket in list \"" + raw + "\"");
      s = s.substr(1, s.size() - 2);
    }
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (!item.empty()) out.push_back(item);
    }
  }
  return out;
}

std::vector<QPolynomial> parse_list(const std::vector<std::string>& args, const std::vector<std::string>& vars) {
  std::vector<QPolynomial> out;
  for (const auto& t : split_list(args)) out.push_back(parse_polynomial(t, vars));
  return out;
}

Rational parse_rational(const std::string& text) {
  const QPolynomial p = parse_polynomial(text, {});
  return p.coeff(Exponent(0));
}

QPoly parse_univariate(const std::string& text, const std::string& var) {
  return to_unipoly(parse_polynomial(text, {var}), 0);
}

SumOfSigns parse_sum(const std::vector<std::string>& args, const std::string& var) {
  SumOfSigns s;
  for (const auto& t : split_list(args)) {
    QPoly g = parse_univariate(t, var);
    if (g.is_zero_poly()) throw Error("cli", Condition::kPrecondition, "a sum of signs may not list the zero polynomial");
    s.polys.push_back(g);
  }
  return s;
}

std::vector<std::string> join_vars(const std::string& first, const std::vector<std::string>& rest) {
  std::vector<std::string> v{first};
  v.insert(v.end(), rest.begin(), rest.end());
  std::string all;
  for (const auto& x : v) all += (all.empty() ? "" : ",") + x;
  return parse_variable_list(all);
}

// ---- output --------------------------------------------------------------

std::string monomial_text(const Exponent& e, const std::vector<std::string>& vars) {
  return to_string(QPolynomial::monomial(e, Rational(1)), vars);
}

Json strings(const SumOfSigns& phi, const std::string& var) {
  Json a = Json::array();
  for (const auto& g : phi.polys) a.push_back(to_string(g, var));
  return a;
}

Json strings(const std::vector<QPoly>& ps, const std::string& var) {
  Json a = Json::array();
  for (const auto& g : ps) a.push_back(to_string(g, var));
  return a;
}

Json point_json(const AlgebraicPoint& p, const std::string& var) {
  Json j;
  if (p.is_rational()) {
    j["value"] = p.lo.get_str();
  } else {
    j["poly"] = to_string(p.poly, var);
    j["lo"] = p.lo.get_str();
    j["hi"] = p.hi.get_str();
  }
  return j;
}

std::string point_text(const AlgebraicPoint& p, const std::string& var) {
  if (p.is_rational()) return p.lo.get_str();
  return "root of " + to_string(p.poly, var) + " in [" + p.lo.get_str() + ", " + p.hi.get_str() + "]";
}

Json steps_json(const StepFunction& s, const std::string& var) {
  Json j;
  j["breakpoints"] = Json::array();
  for (const auto& b : s.breakpoints) j["breakpoints"].push_back(point_json(b, var));
  j["interval_values"] = s.interval_values;
  j["point_values"] = s.point_values;
  return j;
}

std::string steps_text(const StepFunction& s, const std::string& var) {
  std::string out = "(" + std::to_string(s.interval_values.front());
  for (std::size_t i = 0; i < s.breakpoints.size(); ++i)
    out += " | " + std::to_string(s.point_values[i]) + " | " + std::to_string(s.interval_values[i + 1]);
  out += ")";
  for (std::size_t i = 0; i < s.breakpoints.size(); ++i)
    out += (i == 0 ? "\nbreakpoints: " : ", ") + point_text(s.breakpoints[i], var);
  return out;
}

Json staircase_json(const Staircase& st, const std::vector<std::string>& vars) {
  Json j;
  j["dimension"] = st.delta.size();
  j["delta"] = Json::array();
  for (const auto& e : st.delta) j["delta"].push_back(monomial_text(e, vars));
  j["vertices"] = Json::array();
  for (const auto& e : st.vertices) j["vertices"].push_back(monomial_text(e, vars));
  j["socle"] = st.delta.empty() ? Json(nullptr) : Json(monomial_text(st.socle, vars));
  j["truncation_degree"] = st.truncation_degree;
  j["certified"] = st.certified;
  return j;
}

std::string join(const Json& a) {
  std::string out;
  for (const auto& x : a) out += (out.empty() ? "" : ", ") + x.get<std::string>();
  return out;
}

Json optional_int(const std::optional<int>& k) { return k ? Json(*k) : Json(nullptr); }

// ---- jobs ----------------------------------------------------------------

struct Common {
  std::string format = "text";
  std::optional<int> cap;
  std::optional<int> k;
  bool exact = false;

  QuotientOptions quotient() const {
    QuotientOptions q = QuotientOptions::from_environment();
    if (cap) q.cap = *cap;
    return q;
  }
  DegreeOptions degree() const {
    DegreeOptions d;
    d.quotient = quotient();
    d.forced_k = k;
    return d;
  }
  ChiOptions chi() const {
    ChiOptions c;
    c.degree.quotient = quotient();
    c.forced_k = k;
    return c;
  }
  FamilyOptions family() const {
    FamilyOptions f;
    f.degree.quotient = quotient();
    f.forced_k = k;
    return f;
  }
};

Result family_result(const FamilyResult& r, const std::string& param, bool demand_exact) {
  if (demand_exact && !r.exact())
    throw Error("paramfamily", Condition::kIrrationalExceptionalPoint,
                r.symbolic ? "exceptional set has irrational points" : "no sum of signs reproduces the jump data");
  Result out;
  out.fields["value"] = r.symbolic ? strings(r.value, param) : Json(nullptr);
  out.fields["symbolic"] = r.symbolic;
  out.fields["generic"] = strings(r.generic, param);
  Json ex;
  ex["sigma_polys"] = strings(r.sigma_polys, param);
  ex["unresolved"] = Json::array();
  for (const auto& p : r.unresolved) ex["unresolved"].push_back(point_json(p, param));
  ex["exact"] = r.exact();
  out.fields["exceptional"] = ex;
  out.fields["k"] = optional_int(r.k);
  out.fields["steps"] = r.steps ? steps_json(*r.steps, param) : Json(nullptr);

  std::ostringstream t;
  if (r.symbolic)
    t << to_string(r.value, param) << "\n";
  else
    t << "no sum of signs; step function " << steps_text(*r.steps, param) << "\n";
  if (r.unresolved.empty()) {
    t << "exceptional: none";
  } else {
    t << "exceptional (values not certified):";
    for (const auto& p : r.unresolved) t << "\n  " << point_text(p, param);
  }
  out.text = t.str();
  return out;
}

Result int_result(const char* key, int v) {
  Result r;
  r.fields[key] = v;
  r.text = std::to_string(v);
  return r;
}

Result sum_result(const char* key, const SumOfSigns& phi, const std::string& var) {
  Result r;
  r.fields[key] = strings(phi, var);
  r.text = to_string(phi, var);
  return r;
}

void emit(const Common& c, const std::string& command, const Result& r) {
  if (c.format == "json") {
    Json j;
    j["schema"] = kSchema;
    j["command"] = command;
    for (const auto& [key, value] : r.fields.items()) j[key] = value;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << r.text << "\n";
  }
}

int report_error(const Common& c, const std::string& command, const std::string& module, const std::string& condition,
                 const std::string& message, int code) {
  if (c.format == "json") {
    Json j;
    j["schema"] = kSchema;
    j["command"] = command;
    j["error"] = {{"module", module}, {"condition", condition}, {"message", message}, {"exit_code", code}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cerr << "error: " << message << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact degree, Euler characteristic and constructible-function computations"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cap", common.cap, "Largest truncation degree (overrides ALGCON_TRUNCATION_CAP)")
      ->check(CLI::Range(1, 4096));
  app.add_option("--k", common.k, "Fixed regularization / perturbation exponent")->check(CLI::Range(1, 200));
  app.add_flag("--exact", common.exact, "Fail with exit 1 instead of reporting uncertified exceptional points");

  std::string vars_text, param = "w", var = "w", tvar = "t", poly, q, at, values, mode = "affine";
  std::vector<std::string> map, gens, phi_text, psi_text, f_text, gamma_text, breaks_text;
  std::optional<std::string> lo, hi, radius;
  bool gradient = false;

  auto* degree = app.add_subcommand("degree", "Local degree of a map germ at 0");
  degree->add_option("--vars", vars_text)->required();
  degree->add_option("--map", map, "Components (repeat or comma-separate)")->allow_extra_args(false)->required();

  auto* staircase = app.add_subcommand("staircase", "Staircase of the local quotient algebra");
  staircase->add_option("--vars", vars_text)->required();
  staircase->add_option("--gens", gens)->allow_extra_args(false)->required();

  auto* chi = app.add_subcommand("chi", "Euler characteristic of the zero set");
  chi->add_option("--vars", vars_text)->required();
  chi->add_option("--gens", gens)->allow_extra_args(false);
  chi->add_option("--mode", mode)->check(CLI::IsMember({"affine", "compactified", "compact-support"}));

  auto* link_cmd = app.add_subcommand("link", "Euler characteristic of the link at 0");
  link_cmd->add_option("--vars", vars_text)->required();
  link_cmd->add_option("--gens", gens)->allow_extra_args(false);

  auto* link_inf = app.add_subcommand("link-inf", "Euler characteristic of the link at infinity");
  link_inf->add_option("--vars", vars_text)->required();
  link_inf->add_option("--gens", gens)->allow_extra_args(false);

  auto* halfset = app.add_subcommand("chi-halfset", "chi(S_eps cap {g <= 0})");
  halfset->add_option("--vars", vars_text)->required();
  halfset->add_option("--poly", poly)->required();
  halfset->add_flag("--gradient", gradient, "Use 1 - deg grad g (needs an isolated critical point)");

  auto* chi_fam = app.add_subcommand("chi-family", "w -> chi of the fibre over w");
  chi_fam->add_option("--param", param);
  chi_fam->add_option("--vars", vars_text)->required();
  chi_fam->add_option("--gens", gens)->allow_extra_args(false)->required();

  auto* deg_fam = app.add_subcommand("degree-family", "w -> local degree of the map at w");
  deg_fam->add_option("--param", param);
  deg_fam->add_option("--vars", vars_text)->required();
  deg_fam->add_option("--map", map)->allow_extra_args(false)->required();

  auto* cfun = app.add_subcommand("cfun", "Constructible functions on the line as sums of signs");
  cfun->require_subcommand(1);
  auto cfun_verb = [&](const char* name, const char* help) {
    auto* s = cfun->add_subcommand(name, help);
    s->add_option("--var", var, "Variable name (default w)");
    return s;
  };
  auto* c_eval = cfun_verb("eval", "Value at a rational point");
  c_eval->add_option("--phi", phi_text)->allow_extra_args(false)->required();
  c_eval->add_option("--at", at)->required();
  auto* c_add = cfun_verb("add", "phi + psi");
  auto* c_mul = cfun_verb("mul", "phi * psi");
  auto* c_equals = cfun_verb("equals", "Pointwise equality");
  for (auto* s : {c_add, c_mul, c_equals}) {
    s->add_option("--phi", phi_text)->allow_extra_args(false)->required();
    s->add_option("--psi", psi_text)->allow_extra_args(false)->required();
  }
  auto* c_link = cfun_verb("link", "phi(w+) + phi(w-)");
  auto* c_dual = cfun_verb("dual", "phi - link(phi)");
  auto* c_half = cfun_verb("half-link", "link(phi) / 2");
  auto* c_int = cfun_verb("integrate", "Euler integral");
  for (auto* s : {c_link, c_dual, c_half, c_int}) s->add_option("--phi", phi_text)->allow_extra_args(false)->required();
  auto* c_limits = cfun_verb("limits", "One-sided limits in t of gamma(w, t)");
  c_limits->add_option("--gamma", gamma_text)->allow_extra_args(false)->required();
  c_limits->add_option("--tvar", tvar);
  auto* c_spec = cfun_verb("specialize", "Integrals over the Milnor fibres of f");
  auto* c_push = cfun_verb("pushforward", "y -> sum over f(x) = y of phi(x)");
  for (auto* s : {c_spec, c_push}) {
    s->add_option("--phi", phi_text)->allow_extra_args(false)->required();
    s->add_option("--f", f_text)->allow_extra_args(false)->required();
  }
  auto* c_steps = cfun_verb("from-steps", "Sum of signs for a step function");
  c_steps->add_option("--breaks", breaks_text, "Polynomials whose real roots are the breakpoints")->allow_extra_args(false);
  c_steps->add_option("--values", values, "i0|p1|i1|...|pn|in, left to right")->required();

  auto* oracle = app.add_subcommand("oracle", "Independent checks");
  oracle->require_subcommand(1);
  auto* o_sturm = oracle->add_subcommand("sturm", "Distinct real roots in (lo, hi]");
  o_sturm->add_option("--var", var);
  o_sturm->add_option("--poly", poly)->required();
  o_sturm->add_option("--lo", lo);
  o_sturm->add_option("--hi", hi);
  auto* o_isolate = oracle->add_subcommand("isolate", "Isolating intervals of the real roots");
  o_isolate->add_option("--var", var);
  o_isolate->add_option("--poly", poly)->required();
  auto* o_tarski = oracle->add_subcommand("tarski", "Sum of sgn q over the real roots of p");
  o_tarski->add_option("--var", var);
  o_tarski->add_option("--poly", poly)->required();
  o_tarski->add_option("--q", q)->required();
  auto* o_winding = oracle->add_subcommand("winding", "Winding number of a planar map");
  o_winding->add_option("--vars", vars_text)->required();
  o_winding->add_option("--map", map)->allow_extra_args(false)->required();
  o_winding->add_option("--radius", radius);
  auto* o_fiber = oracle->add_subcommand("fiber-count", "Distinct real roots of f(w0, y)");
  o_fiber->add_option("--param", param);
  o_fiber->add_option("--vars", vars_text)->required();
  o_fiber->add_option("--poly", poly)->required();
  o_fiber->add_option("--at", at)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  std::string command;
  for (const CLI::App* s = app.get_subcommands().front();;) {
    command += (command.empty() ? "" : " ") + s->get_name();
    if (s->get_subcommands().empty()) break;
    s = s->get_subcommands().front();
  }

  try {
    Result r;
    auto vars = [&] { return parse_variable_list(vars_text); };
    if (degree->parsed()) {
      const DegreeReport d = local_degree_report(parse_list(map, vars()), common.degree());
      r = int_result("degree", d.degree);
      r.fields["dimension"] = d.dimension;
      r.fields["k"] = optional_int(d.k);
      r.fields["lambda"] = d.lambda.get_str();
      r.fields["char_poly"] = Json::array();
      for (const auto& c : d.char_poly) r.fields["char_poly"].push_back(c.get_str());
    } else if (staircase->parsed()) {
      const auto v = vars();
      const QuotientAlgebra<Rational> a = quotient(parse_list(gens, v), common.quotient());
      r.fields = staircase_json(a.staircase(), v);
      r.text = "dimension " + std::to_string(a.dimension()) + "\ndelta: " + join(r.fields["delta"]) +
               "\nvertices: " + join(r.fields["vertices"]);
    } else if (chi->parsed()) {
      const auto v = vars();
      const auto G = parse_list(gens, v);
      int value = 0;
      if (mode == "affine") value = chi_affine(G, v.size(), common.chi());
      if (mode == "compactified") value = chi_compactified(G, v.size(), common.chi());
      if (mode == "compact-support") value = chi_compact_support(G, v.size(), common.chi());
      r = int_result("chi", value);
      r.fields["mode"] = mode;
    } else if (link_cmd->parsed()) {
      const auto v = vars();
      r = int_result("chi", link_at_origin(parse_list(gens, v), v.size(), common.chi()));
    } else if (link_inf->parsed()) {
      const auto v = vars();
      r = int_result("chi", link_at_infinity(parse_list(gens, v), v.size(), common.chi()));
    } else if (halfset->parsed()) {
      const QPolynomial g = parse_polynomial(poly, vars());
      r = int_result("chi", gradient ? chi_milnor_halfset(g, common.chi()) : halfset_chi(g, common.chi()));
    } else if (chi_fam->parsed()) {
      const auto v = join_vars(param, CLI::detail::split(vars_text, ','));
      r = family_result(chi_family(parse_list(gens, v), v.size(), common.family()), param, common.exact);
    } else if (deg_fam->parsed()) {
      const auto v = join_vars(param, CLI::detail::split(vars_text, ','));
      r = family_result(degree_family(parse_list(map, v), common.family()), param, common.exact);
    } else if (c_eval->parsed()) {
      r = int_result("value", evaluate(parse_sum(phi_text, var), parse_rational(at)));
    } else if (c_add->parsed()) {
      r = sum_result("phi", add(parse_sum(phi_text, var), parse_sum(psi_text, var)), var);
    } else if (c_mul->parsed()) {
      r = sum_result("phi", multiply(parse_sum(phi_text, var), parse_sum(psi_text, var)), var);
    } else if (c_equals->parsed()) {
      const bool e = equals(parse_sum(phi_text, var), parse_sum(psi_text, var));
      r.fields["equal"] = e;
      r.text = e ? "true" : "false";
    } else if (c_link->parsed()) {
      r = sum_result("phi", link(parse_sum(phi_text, var)), var);
    } else if (c_dual->parsed()) {
      r = sum_result("phi", dual(parse_sum(phi_text, var)), var);
    } else if (c_half->parsed()) {
      r = sum_result("phi", half_link(parse_sum(phi_text, var)), var);
    } else if (c_int->parsed()) {
      r = int_result("integral", euler_integral(parse_sum(phi_text, var)));
    } else if (c_limits->parsed()) {
      const OneSidedLimits l = one_sided_limits(parse_list(gamma_text, join_vars(var, {tvar})));
      r.fields["plus"] = strings(l.plus, var);
      r.fields["minus"] = strings(l.minus, var);
      r.fields["half"] = strings(l.half, var);
      r.text = "plus: " + to_string(l.plus, var) + "\nminus: " + to_string(l.minus, var) + "\nhalf: " +
               to_string(l.half, var);
    } else if (c_spec->parsed()) {
      const auto fs = split_list(f_text);
      if (fs.size() != 1) throw Error("cli", Condition::kPrecondition, "--f takes one polynomial");
      const Specialization s = specialize(parse_sum(phi_text, var), parse_univariate(fs[0], var));
      r.fields["plus"] = strings(s.plus, var);
      r.fields["minus"] = strings(s.minus, var);
      r.fields["half_diff"] = strings(s.half_diff, var);
      r.text = "plus: " + to_string(s.plus, var) + "\nminus: " + to_string(s.minus, var) + "\nhalf_diff: " +
               to_string(s.half_diff, var);
    } else if (c_push->parsed()) {
      const auto fs = split_list(f_text);
      if (fs.size() != 1) throw Error("cli", Condition::kPrecondition, "--f takes one polynomial");
      const StepFunction s = pushforward(parse_sum(phi_text, var), parse_univariate(fs[0], var));
      r.fields["steps"] = steps_json(s, var);
      r.text = steps_text(s, var);
    } else if (c_steps->parsed()) {
      StepFunction s;
      std::vector<QPoly> breaks;
      for (const auto& t : split_list(breaks_text)) breaks.push_back(parse_univariate(t, var));
      s.breakpoints = breakpoints_of(breaks);
      std::vector<int> vals;
      for (const auto& t : CLI::detail::split(values, '|')) {
        try {
          std::size_t used = 0;
          const std::string item = trim(t);
          vals.push_back(std::stoi(item, &used));
          if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
          throw Error("cli", Condition::kParseError, "bad step value \"" + t + "\"");
        }
      }
      if (vals.size() != 2 * s.breakpoints.size() + 1)
        throw Error("cli", Condition::kPrecondition,
                    std::to_string(s.breakpoints.size()) + " breakpoints need " +
                        std::to_string(2 * s.breakpoints.size() + 1) + " values");
      for (std::size_t i = 0; i < vals.size(); ++i) (i % 2 == 0 ? s.interval_values : s.point_values).push_back(vals[i]);
      r = sum_result("phi", from_step_function(s), var);
    } else if (o_sturm->parsed()) {
      std::optional<Rational> a, b;
      if (lo) a = parse_rational(*lo);
      if (hi) b = parse_rational(*hi);
      r = int_result("count", count_roots(parse_univariate(poly, var), a, b));
    } else if (o_isolate->parsed()) {
      const auto roots = isolate_roots(parse_univariate(poly, var));
      r.fields["roots"] = Json::array();
      for (const auto& p : roots) {
        r.fields["roots"].push_back({{"lo", p.lo.get_str()}, {"hi", p.hi.get_str()}});
        r.text += (r.text.empty() ? "" : "\n") + std::string("[") + p.lo.get_str() + ", " + p.hi.get_str() + "]";
      }
      if (roots.empty()) r.text = "no real roots";
    } else if (o_tarski->parsed()) {
      r = int_result("value", tarski_query(parse_univariate(poly, var), parse_univariate(q, var)));
    } else if (o_winding->parsed()) {
      const auto F = parse_list(map, vars());
      r = int_result("winding", radius ? winding_number(F, parse_rational(*radius)) : winding_degree(F));
    } else if (o_fiber->parsed()) {
      const auto v = join_vars(param, CLI::detail::split(vars_text, ','));
      if (v.size() != 2) throw Error("cli", Condition::kPrecondition, "fiber-count takes one fibre variable");
      const std::optional<int> c = fiber_root_count(parse_polynomial(poly, v), parse_rational(at));
      r.fields["count"] = optional_int(c);
      r.fields["whole_line"] = !c.has_value();
      r.text = c ? std::to_string(*c) : "whole line";
    }
    emit(common, command, r);
    return 0;
  } catch (const Error& e) {
    return report_error(common, command, e.module(), condition_name(e.condition()), e.what(),
                        is_usage_condition(e.condition()) ? 2 : 1);
  } catch (const std::invalid_argument& e) {
    return report_error(common, command, "cli", "PreconditionViolated", e.what(), 2);
  } catch (const std::exception& e) {
    return report_error(common, command, "cli", "Failure", e.what(), 1);
  }
}
