// Functionals on the nilpotent algebra, the coadjoint action of exp(g), and the
// skew form f([x, y]) whose rank is the orbit dimension.
#pragma once

#include "coadj/linalg.hpp"
#include "coadj/rational.hpp"
#include "coadj/rootsys.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace coadj {

/// Element of g* in the dual basis {e_alpha^*}. Immutable; operations return
/// new values.
class Functional {
 public:
  explicit Functional(RootSystem sys) : sys_(std::move(sys)), values_(sys_.size()) {}

  Functional(RootSystem sys, std::vector<Rational> values)
      : sys_(std::move(sys)), values_(std::move(values)) {
    if (values_.size() != sys_.size())
      throw std::invalid_argument("functional has " + std::to_string(values_.size()) +
                                  " coordinates, expected " + std::to_string(sys_.size()));
  }

  /// c * e_alpha^*.
  static Functional dual_basis(const RootSystem& sys, const Root& alpha, const Rational& c = 1) {
    Functional f(sys);
    f.values_[sys.ordinal(alpha)] = c;
    return f;
  }

  static Functional from_map(const RootSystem& sys, const std::map<Root, Rational>& values) {
    Functional f(sys);
    for (const auto& [r, v] : values) f.values_[sys.ordinal(r)] = v;
    return f;
  }

  const RootSystem& system() const { return sys_; }
  const std::vector<Rational>& values() const { return values_; }

  const Rational& at(std::size_t ordinal) const { return values_.at(ordinal); }
  const Rational& operator()(const Root& r) const { return values_[sys_.ordinal(r)]; }

  Functional with(const Root& r, const Rational& v) const {
    Functional out = *this;
    out.values_[sys_.ordinal(r)] = v;
    return out;
  }

  /// Nonzero coordinates only, keyed by root.
  std::map<Root, Rational> nonzero() const {
    std::map<Root, Rational> out;
    for (std::size_t k = 0; k < values_.size(); ++k)
      if (values_[k] != 0) out.emplace(sys_.root(k), values_[k]);
    return out;
  }

  bool is_zero() const {
    for (const auto& v : values_)
      if (v != 0) return false;
    return true;
  }

  Functional scaled(const Rational& c) const {
    Functional out = *this;
    for (auto& v : out.values_) v *= c;
    return out;
  }

  friend Functional operator+(const Functional& a, const Functional& b) {
    a.require_same(b);
    Functional out = a;
    for (std::size_t k = 0; k < out.values_.size(); ++k) out.values_[k] += b.values_[k];
    return out;
  }

  friend bool operator==(const Functional& a, const Functional& b) {
    return a.sys_ == b.sys_ && a.values_ == b.values_;
  }

  void require_same(const Functional& other) const {
    if (!(sys_ == other.sys_))
      throw std::invalid_argument("functionals live on different algebras: " + sys_.name() +
                                  " vs " + other.sys_.name());
  }

 private:
  RootSystem sys_;
  std::vector<Rational> values_;
};

/// exp(t e_root).
struct Letter {
  Root root;
  Rational t;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// The product exp(t_1 e_1) exp(t_2 e_2) ... exp(t_k e_k); empty means identity.
struct GroupWord {
  std::vector<Letter> letters;

  GroupWord& then(const Root& r, const Rational& t) {
    letters.push_back({r, t});
    return *this;
  }
  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

/// exp(t e_beta) . f, i.e. gamma -> f(exp(ad(-t e_beta)) e_gamma). The series
/// stops once ad(e_beta)^k e_gamma vanishes.
inline Functional coadjoint_apply_one(const Root& beta, const Rational& t, const Functional& f) {
  const RootSystem& sys = f.system();
  const std::size_t b = sys.ordinal(beta);
  if (t == 0) return f;
  std::vector<Rational> out(sys.size());
  const Rational minus_t = -t;
  for (std::size_t g = 0; g < sys.size(); ++g) {
    Rational acc = f.at(g);
    // term = (-t)^k / k! * coefficient of ad(e_beta)^k e_gamma
    Rational term = 1;
    std::size_t idx = g;
    for (int k = 1;; ++k) {
      auto [coef, next] = sys.bracket_index(b, idx);
      if (next == RootSystem::npos) break;
      term *= minus_t * coef;
      term /= k;
      idx = next;
      if (f.at(idx) != 0) acc += term * f.at(idx);
    }
    out[g] = std::move(acc);
  }
  return Functional(sys, std::move(out));
}

/// w . f for w = g_1 g_2 ... g_k: the rightmost letter acts first, so that
/// (g h) . f = g . (h . f).
inline Functional coadjoint_apply(const GroupWord& word, const Functional& f) {
  Functional out = f;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
    out = coadjoint_apply_one(it->root, it->t, out);
  return out;
}

/// M[a][b] = f([e_a, e_b]).
inline RationalMatrix skew_form(const Functional& f) {
  const RootSystem& sys = f.system();
  RationalMatrix m(sys.size(), sys.size());
  for (std::size_t a = 0; a < sys.size(); ++a)
    for (std::size_t b = 0; b < sys.size(); ++b) {
      auto [coef, res] = sys.bracket_index(a, b);
      if (res != RootSystem::npos && f.at(res) != 0) m(a, b) = coef * f.at(res);
    }
  return m;
}

/// dim g/g^f, the rank of the skew form. Always even.
inline std::size_t orbit_dimension(const Functional& f) { return rank(skew_form(f)); }

/// Kernel of the skew form, as coefficient vectors over the canonical roots.
inline std::vector<std::vector<Rational>> radical_basis(const Functional& f) {
  return kernel_basis(skew_form(f));
}

}  // namespace coadj
