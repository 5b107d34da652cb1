// Sparse multivariate polynomials with exact rational coefficients. Variables
// are small integer ids (root ordinals in practice); a monomial is the sorted
// multiset of its variable ids.
#pragma once

#include "coadj/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace coadj {

class Polynomial {
 public:
  using Monomial = std::vector<std::size_t>;
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;

  static Polynomial constant(const Rational& c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(Monomial{}, c);
    return p;
  }

  static Polynomial variable(std::size_t id) {
    Polynomial p;
    p.terms_.emplace(Monomial{id}, Rational(1));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.size());
    return d;
  }

  bool is_constant() const { return degree() == 0; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + b * Rational(-1); }

  friend Polynomial operator*(const Polynomial& a, const Rational& s) {
    Polynomial out;
    if (s == 0) return out;
    for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, c * s);
    return out;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m;
        m.reserve(ma.size() + mb.size());
        std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
        out.add_term(m, ca * cb);
      }
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  template <class Valuation>
  Rational evaluate(Valuation&& value_of) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
      Rational term = c;
      for (std::size_t v : m) term *= value_of(v);
      total += term;
    }
    return total;
  }

  /// Each monomial of degree d is multiplied by scale^(1-d). Rewrites the
  /// defining equation of O(1) into the one of O(c) when scale = c.
  Polynomial homogenized(const Rational& scale) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      Rational factor = scale;
      for (std::size_t k = 0; k < m.size(); ++k) factor /= scale;
      out.terms_.emplace(m, c * factor);
    }
    return out;
  }

  /// Renders with caller-provided variable names; `times` joins factors and
  /// repeated factors print as name + power_open + k + power_close.
  std::string render(const std::function<std::string(std::size_t)>& name, const std::string& times,
                     const std::string& power_open = "^", const std::string& power_close = "") const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // Higher-degree terms first; within a degree, map order.
    std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
    for (const auto& [m, c] : ordered) {
      Rational mag = abs(c);
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      std::string body;
      for (std::size_t k = 0; k < m.size();) {
        std::size_t run = 1;
        while (k + run < m.size() && m[k + run] == m[k]) ++run;
        if (!body.empty()) body += times;
        body += name(m[k]);
        if (run > 1) body += power_open + std::to_string(run) + power_close;
        k += run;
      }
      if (body.empty()) {
        out += to_string(mag);
      } else if (mag == 1) {
        out += body;
      } else {
        const bool fraction = mag.get_den() != 1;
        out += (fraction ? "(" + to_string(mag) + ")" : to_string(mag)) + times + body;
      }
    }
    return out;
  }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

}  // namespace coadj
