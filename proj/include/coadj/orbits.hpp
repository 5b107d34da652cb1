// Elementary coadjoint orbits O_alpha(c): singular/regular roots, the
// polynomial charts that cut the orbits out of g*, chart points, and group
// words reaching any chart point from c * e_alpha^*.
#pragma once

#include "coadj/liealg.hpp"
#include "coadj/polynomial.hpp"
#include "coadj/rational.hpp"
#include "coadj/rootsys.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coadj {

struct ZeroScalar : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct AssignmentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotInOrbit : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when two overlapping chart cases disagree on a regular root.
struct ChartInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

/// gamma in the "left" half S_(i) paired with the unique gamma' in the
/// "right" half with gamma + gamma' = alpha, and [e_gamma, e_gamma'] =
/// sign * e_alpha.
struct SingularPair {
  Root left;
  Root right;
  int sign = 0;
};

struct SingularData {
  Root alpha;
  std::vector<Root> singular;  // pair order: left_1, right_1, left_2, right_2, ...
  std::vector<Root> regular;   // canonical order
  std::vector<SingularPair> pairs;

  std::vector<Root> left() const {
    std::vector<Root> out;
    for (const auto& p : pairs) out.push_back(p.left);
    return out;
  }
  std::vector<Root> right() const {
    std::vector<Root> out;
    for (const auto& p : pairs) out.push_back(p.right);
    return out;
  }
  bool is_singular(const Root& r) const {
    return std::find(singular.begin(), singular.end(), r) != singular.end();
  }
};

/// Closed-form |S(alpha)|.
inline std::size_t singular_count(RootKind kind, int n, const Root& a) {
  switch (a.form) {
    case Root::Form::Diff: return static_cast<std::size_t>(2 * (a.j - a.i - 1));
    case Root::Form::Short: return static_cast<std::size_t>(2 * (n - a.i));
    case Root::Form::Sum:
      return kind == RootKind::B ? static_cast<std::size_t>(2 * (2 * n - (a.i + a.j)))
                                 : static_cast<std::size_t>(2 * (2 * n - a.i - a.j - 1));
  }
  return 0;
}

inline SingularData singular_set(const RootSystem& sys, const Root& alpha) {
  if (!sys.contains(alpha))
    throw InvalidRoot("root " + to_string(alpha) + " is not in " + sys.name());
  const int n = sys.rank();
  const int i = alpha.i, j = alpha.j;
  SingularData d;
  d.alpha = alpha;
  auto pair = [&](Root l, Root r) {
    auto b = bracket(sys, l, r);
    if (!b || !(b->result == alpha) || (b->coef != 1 && b->coef != -1))
      throw InconsistentBracket("[" + to_string(l) + ", " + to_string(r) + "] is not +-e_" +
                                to_string(alpha));
    d.pairs.push_back({l, r, b->coef});
  };
  switch (alpha.form) {
    case Root::Form::Diff:
      for (int k = i + 1; k < j; ++k) pair(Root::diff(i, k), Root::diff(k, j));
      break;
    case Root::Form::Short:
      for (int k = i + 1; k <= n; ++k) pair(Root::diff(i, k), Root::shortr(k));
      break;
    case Root::Form::Sum:
      for (int k = i + 1; k < j; ++k) pair(Root::diff(i, k), Root::sum(k, j));
      for (int k = j + 1; k <= n; ++k) pair(Root::diff(i, k), Root::sum(j, k));
      if (sys.kind() == RootKind::B) pair(Root::shortr(i), Root::shortr(j));
      for (int k = j + 1; k <= n; ++k) pair(Root::sum(i, k), Root::diff(j, k));
      break;
  }
  for (const auto& p : d.pairs) {
    d.singular.push_back(p.left);
    d.singular.push_back(p.right);
  }
  std::set<Root> sing(d.singular.begin(), d.singular.end());
  for (const Root& r : sys.roots())
    if (!sing.count(r)) d.regular.push_back(r);
  return d;
}

/// Sign attached to the k-th product f(e_{i-k}) f(e_{i+k}) in the e_r - e_j
/// constraint of a Sum-root chart.
enum class SignRule : std::uint8_t {
  AlternatingK,        // (-1)^k
  AlternatingKMinusJ,  // (-1)^(k-j)
  NegAlternatingK,     // -(-1)^k
  ConstantPlus,        // +1
  ConstantMinus,       // -1
};

inline constexpr SignRule kAllSignRules[] = {SignRule::AlternatingK, SignRule::AlternatingKMinusJ,
                                             SignRule::NegAlternatingK, SignRule::ConstantPlus,
                                             SignRule::ConstantMinus};

/// The rule the oracle certifies for the root vectors used here; see
/// CONVENTIONS.md.
inline constexpr SignRule kCertifiedSignRule = SignRule::ConstantMinus;

inline int sign_of(SignRule rule, int k, int j) {
  auto alt = [](int e) { return (e % 2 == 0) ? 1 : -1; };
  switch (rule) {
    case SignRule::AlternatingK: return alt(k);
    case SignRule::AlternatingKMinusJ: return alt(k - j);
    case SignRule::NegAlternatingK: return -alt(k);
    case SignRule::ConstantPlus: return 1;
    case SignRule::ConstantMinus: return -1;
  }
  return 0;
}

inline std::string to_string(SignRule rule) {
  switch (rule) {
    case SignRule::AlternatingK: return "(-1)^k";
    case SignRule::AlternatingKMinusJ: return "(-1)^(k-j)";
    case SignRule::NegAlternatingK: return "-(-1)^k";
    case SignRule::ConstantPlus: return "+1";
    case SignRule::ConstantMinus: return "-1";
  }
  return "?";
}

/// Defining equations of O_alpha(c). Constraints are stored for c = 1 over the
/// singular-root variables (variable id = root ordinal); membership rescales
/// the input by 1/c.
class OrbitChart {
 public:
  const RootSystem& system() const { return sys_; }
  const Root& alpha() const { return data_.alpha; }
  const Rational& scalar() const { return c_; }
  const SingularData& data() const { return data_; }
  SignRule sign_rule() const { return rule_; }

  /// Constraint for O_alpha(1) at a regular root.
  const Polynomial& constraint(const Root& beta) const {
    auto it = constraints_.find(sys_.ordinal(beta));
    if (it == constraints_.end())
      throw InvalidRoot("root " + to_string(beta) + " is not regular for " + to_string(alpha()));
    return it->second;
  }

  /// Constraint for O_alpha(c): f(beta) = c * P(f / c).
  Polynomial scaled_constraint(const Root& beta) const { return constraint(beta).homogenized(c_); }

  const std::map<std::size_t, Polynomial>& constraints() const { return constraints_; }

 private:
  friend OrbitChart orbit_chart(const RootSystem&, const Root&, const Rational&, SignRule);
  RootSystem sys_;
  SingularData data_;
  Rational c_;
  SignRule rule_ = kCertifiedSignRule;
  std::map<std::size_t, Polynomial> constraints_;
};

inline OrbitChart orbit_chart(const RootSystem& sys, const Root& alpha, const Rational& c = 1,
                              SignRule rule = kCertifiedSignRule) {
  if (c == 0) throw ZeroScalar("orbit scalar c must be nonzero");
  OrbitChart chart;
  chart.sys_ = sys;
  chart.data_ = singular_set(sys, alpha);
  chart.c_ = c;
  chart.rule_ = rule;
  const SingularData& d = chart.data_;
  auto& out = chart.constraints_;
  const int n = sys.rank();
  const int i = alpha.i, j = alpha.j;

  // f(e_root) in terms of singular variables; regular roots must already be
  // resolved in `out`.
  auto f = [&](const Root& r) -> Polynomial {
    if (r == alpha) return Polynomial::constant(1);
    const std::size_t ord = sys.ordinal(r);
    if (d.is_singular(r)) return Polynomial::variable(ord);
    auto it = out.find(ord);
    if (it == out.end())
      throw ChartInconsistency("chart factor " + to_string(r) + " used before it is resolved");
    return it->second;
  };

  out[sys.ordinal(alpha)] = Polynomial::constant(1);

  if (alpha.is_diff()) {
    for (const Root& beta : d.regular) {
      if (beta == alpha) continue;
      Polynomial p;
      if (beta.is_diff() && i < beta.i && beta.j < j)
        p = f(Root::diff(i, beta.j)) * f(Root::diff(beta.i, j));
      out[sys.ordinal(beta)] = p;
    }
    return chart;
  }

  if (alpha.is_short()) {
    for (const Root& beta : d.regular) {
      if (beta == alpha) continue;
      Polynomial p;
      if (beta.is_diff() && i < beta.i) p = f(Root::diff(i, beta.j)) * f(Root::shortr(beta.i));
      out[sys.ordinal(beta)] = p;
    }
    return chart;
  }

  // Sum root alpha = e_i + e_j. The e_i - e_j coordinate is resolved first
  // since the other cases refer to it.
  const bool type_b = sys.kind() == RootKind::B;
  Polynomial base;
  if (type_b) base = f(Root::shortr(i)) * f(Root::shortr(i)) * Rational(-1, 2);
  for (int k = j + 1; k <= n; ++k)
    base = base + f(Root::diff(i, k)) * f(Root::sum(i, k)) * Rational(sign_of(rule, k, j));
  out[sys.ordinal(Root::diff(i, j))] = base;

  for (const Root& beta : d.regular) {
    if (beta == alpha || beta == Root::diff(i, j)) continue;
    const int r = beta.i, s = beta.j;
    Polynomial p;
    if (beta.is_diff()) {
      if (i <= r && s == j) {
        p = f(Root::sum(r, j)) * base;
        // Same coordinate through the e_r - e_s, i <= r < s <= j case.
        Polynomial via_rect = f(Root::diff(i, j)) * f(Root::sum(r, j));
        if (!(via_rect == p))
          throw ChartInconsistency("overlapping chart cases disagree at " + to_string(beta));
      } else if (i < r && s < j) {
        p = f(Root::diff(i, s)) * f(Root::sum(r, j));
      } else if (i < r && r < j && j < s) {
        p = f(Root::diff(i, s)) * f(Root::sum(r, j));
      } else if (j < r) {
        p = f(Root::diff(j, s)) * f(Root::sum(i, r)) - f(Root::diff(i, s)) * f(Root::sum(j, r));
      }
    } else if (beta.is_sum()) {
      if (i < r && r < j && j < s) {
        p = f(Root::sum(i, s)) * f(Root::sum(r, j));
      } else if (j < r) {
        p = f(Root::sum(j, s)) * f(Root::sum(i, r)) - f(Root::sum(i, s)) * f(Root::sum(j, r));
      }
    } else {
      if (i < r && r < j) {
        p = f(Root::shortr(i)) * f(Root::sum(r, j));
      } else if (j < r) {
        p = f(Root::shortr(j)) * f(Root::sum(i, r)) - f(Root::shortr(i)) * f(Root::sum(j, r));
      }
    }
    out[sys.ordinal(beta)] = p;
  }
  return chart;
}

/// True iff every constraint of the chart holds exactly at f.
inline bool contains(const OrbitChart& chart, const Functional& f) {
  if (!(f.system() == chart.system()))
    throw std::invalid_argument("functional and chart live on different algebras");
  const Rational inv = 1 / chart.scalar();
  auto value = [&](std::size_t ord) { return f.at(ord) * inv; };
  for (const auto& [ord, poly] : chart.constraints())
    if (poly.evaluate(value) != value(ord)) return false;
  return true;
}

/// Unique point of the chart variety with the given singular coordinates.
inline Functional chart_point(const OrbitChart& chart, const std::map<Root, Rational>& assignment) {
  const SingularData& d = chart.data();
  for (const auto& [r, v] : assignment)
    if (!d.is_singular(r))
      throw AssignmentError("assignment names " + to_string(r) + ", which is not singular for " +
                            to_string(d.alpha));
  for (const Root& r : d.singular)
    if (!assignment.count(r))
      throw AssignmentError("assignment is missing singular root " + to_string(r));
  const RootSystem& sys = chart.system();
  std::vector<Rational> values(sys.size());
  for (const auto& [r, v] : assignment) values[sys.ordinal(r)] = v;
  const Rational inv = 1 / chart.scalar();
  auto scaled = [&](std::size_t ord) { return values[ord] * inv; };
  for (const auto& [ord, poly] : chart.constraints()) values[ord] = chart.scalar() * poly.evaluate(scaled);
  return Functional(sys, std::move(values));
}

/// Word w with w . (c e_alpha^*) = f: the product of exp(n f(gamma)/c e_gamma')
/// over all pairs, followed by the product of exp(-n f(gamma')/c e_gamma).
inline GroupWord construct_group_word(const OrbitChart& chart, const Functional& f) {
  if (!contains(chart, f))
    throw NotInOrbit("functional is not in O_" + to_string(chart.alpha()) + "(" +
                     to_string(chart.scalar()) + ")");
  const Rational inv = 1 / chart.scalar();
  GroupWord w;
  for (const auto& p : chart.data().pairs) w.then(p.right, p.sign * f(p.left) * inv);
  for (const auto& p : chart.data().pairs) w.then(p.left, -p.sign * f(p.right) * inv);
  return w;
}

inline GroupWord construct_group_word(const RootSystem& sys, const Root& alpha, const Functional& f) {
  return construct_group_word(orbit_chart(sys, alpha), f);
}

/// One "f(e_beta) = ..." line per regular root, alpha first.
inline std::vector<std::string> render_chart_text(const OrbitChart& chart) {
  const RootSystem& sys = chart.system();
  auto name = [&](std::size_t ord) { return "f(" + to_string(sys.root(ord)) + ")"; };
  std::vector<std::string> lines;
  auto line = [&](const Root& beta) {
    lines.push_back(name(sys.ordinal(beta)) + " = " + chart.scaled_constraint(beta).render(name, "*"));
  };
  line(chart.alpha());
  for (const Root& beta : chart.data().regular)
    if (!(beta == chart.alpha())) line(beta);
  return lines;
}

inline std::vector<std::string> render_chart_latex(const OrbitChart& chart) {
  const RootSystem& sys = chart.system();
  auto name = [&](std::size_t ord) { return "f(e_{" + to_latex(sys.root(ord)) + "})"; };
  std::vector<std::string> lines;
  auto line = [&](const Root& beta) {
    std::string rhs = chart.scaled_constraint(beta).render(name, "", "^{", "}");
    // Fractions as \frac{p}{q}.
    std::string out;
    for (std::size_t k = 0; k < rhs.size(); ++k) {
      if (rhs[k] == '(') {
        auto close = rhs.find(')', k);
        auto inner = rhs.substr(k + 1, close - k - 1);
        auto slash = inner.find('/');
        if (slash != std::string::npos && inner.find('f') == std::string::npos) {
          out += "\\frac{" + inner.substr(0, slash) + "}{" + inner.substr(slash + 1) + "}";
          k = close;
          continue;
        }
      }
      out += rhs[k];
    }
    lines.push_back(name(sys.ordinal(beta)) + " = " + out);
  };
  line(chart.alpha());
  for (const Root& beta : chart.data().regular)
    if (!(beta == chart.alpha())) line(beta);
  return lines;
}

}  // namespace coadj
