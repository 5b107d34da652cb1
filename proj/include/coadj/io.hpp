// JSON forms of root systems, functionals, charts and basic subsets.
#pragma once

#include "coadj/basic.hpp"
#include "coadj/liealg.hpp"
#include "coadj/orbits.hpp"
#include "coadj/rational.hpp"
#include "coadj/rootsys.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace coadj {

using json = nlohmann::ordered_json;

struct FormatError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline json to_json(const RootSystem& sys) {
  json roots = json::array();
  for (const Root& r : sys.roots()) roots.push_back(to_string(r));
  return {{"kind", std::string(1, kind_letter(sys.kind()))}, {"n", sys.rank()}, {"roots", roots}};
}

inline json to_json(const Functional& f) {
  json values = json::object();
  for (const auto& [r, v] : f.nonzero()) values[to_string(r)] = to_string(v);
  return {{"kind", std::string(1, kind_letter(f.system().kind()))},
          {"n", f.system().rank()},
          {"values", values}};
}

inline Rational rational_from_json(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw FormatError("rational values must be \"p/q\" strings or integers, got " + v.dump());
}

inline RootSystem system_from_json(const json& j) {
  if (!j.contains("kind") || !j.contains("n")) throw FormatError("missing \"kind\" or \"n\"");
  return positive_roots(parse_kind(j.at("kind").get<std::string>()), j.at("n").get<int>());
}

inline Functional functional_from_json(const json& j) {
  RootSystem sys = system_from_json(j);
  std::map<Root, Rational> values;
  if (j.contains("values")) {
    if (!j.at("values").is_object()) throw FormatError("\"values\" must be an object");
    for (const auto& [key, v] : j.at("values").items()) {
      Root r = parse_root(key);
      if (!sys.contains(r)) throw InvalidRoot("root " + key + " is not in " + sys.name());
      values[r] = rational_from_json(v);
    }
  }
  return Functional::from_map(sys, values);
}

/// Term list [{"coef": "p/q", "vars": ["e1-e3", ...]}, ...].
inline json to_json(const Polynomial& p, const RootSystem& sys) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json vars = json::array();
    for (std::size_t v : m) vars.push_back(to_string(sys.root(v)));
    terms.push_back({{"coef", to_string(c)}, {"vars", vars}});
  }
  return terms;
}

inline Polynomial polynomial_from_json(const json& terms, const RootSystem& sys) {
  Polynomial p;
  for (const auto& t : terms) {
    Polynomial term = Polynomial::constant(rational_from_json(t.at("coef")));
    for (const auto& v : t.at("vars")) term = term * Polynomial::variable(sys.ordinal(parse_root(v.get<std::string>())));
    p = p + term;
  }
  return p;
}

/// Constraints are those of O_alpha(1); membership in O_alpha(c) applies them
/// to f / c.
inline json to_json(const OrbitChart& chart) {
  const RootSystem& sys = chart.system();
  json constraints = json::object();
  constraints[to_string(chart.alpha())] = to_json(chart.constraint(chart.alpha()), sys);
  for (const Root& r : chart.data().regular)
    if (!(r == chart.alpha())) constraints[to_string(r)] = to_json(chart.constraint(r), sys);
  json singular = json::array();
  for (const Root& r : chart.data().singular) singular.push_back(to_string(r));
  return {{"kind", std::string(1, kind_letter(sys.kind()))},
          {"n", sys.rank()},
          {"alpha", to_string(chart.alpha())},
          {"c", to_string(chart.scalar())},
          {"sign_rule", to_string(chart.sign_rule())},
          {"singular", singular},
          {"constraints", constraints}};
}

inline json basic_to_json(int n, const RootSet& d, const BasicMap& phi = {}) {
  json roots = json::array();
  for (const Root& r : d) roots.push_back(to_string(r));
  json out = {{"n", n}, {"roots", roots}};
  if (!phi.empty()) {
    json p = json::object();
    for (const auto& [r, v] : phi) p[to_string(r)] = to_string(v);
    out["phi"] = p;
  }
  return out;
}

inline DecompositionResult basic_from_json(const json& j) {
  DecompositionResult out;
  const int n = j.at("n").get<int>();
  for (const auto& r : j.at("roots")) {
    Root root = parse_root(r.get<std::string>());
    if (!root.is_diff() || !root_valid(RootKind::A, n, root))
      throw InvalidRoot("root " + to_string(root) + " is not in A" + std::to_string(n - 1) + "+");
    out.subset.insert(root);
  }
  if (j.contains("phi"))
    for (const auto& [key, v] : j.at("phi").items()) out.map[parse_root(key)] = rational_from_json(v);
  return out;
}

}  // namespace coadj
