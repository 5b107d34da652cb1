// Independent reference computations used by the tests. Nothing here goes
// through the bracket table; everything is done on explicit matrices.
#pragma once

#include "coadj/coadj.hpp"

#include <map>
#include <vector>

namespace oracle {

using coadj::Rational;
using Mat = std::vector<std::vector<Rational>>;

inline Mat zero(int d) { return Mat(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d))); }

inline Mat identity(int d) {
  Mat m = zero(d);
  for (int k = 0; k < d; ++k) m[k][k] = 1;
  return m;
}

inline Mat dense(const coadj::MatrixRealization& x) {
  Mat m = zero(x.dim);
  for (const auto& [pos, v] : x.entries) m[pos.first - 1][pos.second - 1] = v;
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  const std::size_t d = a.size();
  Mat c(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline Mat add(const Mat& a, const Mat& b, const Rational& s = 1) {
  Mat c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += s * b[i][j];
  return c;
}

/// exp(t X) for nilpotent X, by the terminating series.
inline Mat exp_nilpotent(const Mat& x, const Rational& t) {
  const int d = static_cast<int>(x.size());
  Mat out = identity(d), term = identity(d);
  for (int k = 1; k <= d; ++k) {
    term = mul(term, x);
    Rational scale = 1;
    for (int q = 1; q <= k; ++q) scale *= t / q;
    out = add(out, term, scale);
  }
  return out;
}

/// Coordinates of a matrix y in the root-vector basis; fails if y is not in
/// their span.
inline std::vector<Rational> coordinates(const coadj::RootSystem& sys, const Mat& y, bool& ok) {
  std::vector<Rational> c(sys.size());
  Mat rest = y;
  for (std::size_t k = 0; k < sys.size(); ++k) {
    const Mat v = dense(sys.vector(k));
    const auto& [pos, val] = *sys.vector(k).entries.begin();
    c[k] = rest[pos.first - 1][pos.second - 1] / val;
    rest = add(rest, v, -c[k]);
  }
  ok = true;
  for (const auto& row : rest)
    for (const auto& x : row)
      if (x != 0) ok = false;
  return c;
}

/// (g . f)(x) = f(g^{-1} x g) for g = exp(t e_beta), computed on matrices.
inline coadj::Functional act(const coadj::Root& beta, const Rational& t, const coadj::Functional& f) {
  const auto& sys = f.system();
  const Mat x = dense(coadj::root_vector(sys, beta));
  const Mat g = exp_nilpotent(x, t), ginv = exp_nilpotent(x, -t);
  std::vector<Rational> out(sys.size());
  for (std::size_t k = 0; k < sys.size(); ++k) {
    bool ok = false;
    const auto c = coordinates(sys, mul(mul(ginv, dense(sys.vector(k))), g), ok);
    if (!ok) throw std::logic_error("conjugate left the algebra");
    for (std::size_t q = 0; q < sys.size(); ++q) out[k] += c[q] * f.at(q);
  }
  return coadj::Functional(sys, out);
}

inline coadj::Functional act(const coadj::GroupWord& w, coadj::Functional f) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) f = act(it->root, it->t, f);
  return f;
}

/// Matrix commutator expressed in the root basis.
inline std::vector<Rational> bracket_coordinates(const coadj::RootSystem& sys, std::size_t a, std::size_t b) {
  const Mat x = dense(sys.vector(a)), y = dense(sys.vector(b));
  bool ok = false;
  auto c = coordinates(sys, add(mul(x, y), mul(y, x), -1), ok);
  if (!ok) throw std::logic_error("commutator left the algebra");
  return c;
}

/// Rank of the skew form B_f(x, y) = f([x, y]) from matrix commutators, by
/// fraction-free elimination on a copy.
inline std::size_t orbit_dimension(const coadj::Functional& f) {
  const auto& sys = f.system();
  const std::size_t m = sys.size();
  Mat b(m, std::vector<Rational>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto c = bracket_coordinates(sys, i, j);
      for (std::size_t q = 0; q < m; ++q) b[i][j] += c[q] * f.at(q);
    }
  std::size_t r = 0;
  for (std::size_t col = 0; col < m && r < m; ++col) {
    std::size_t p = r;
    while (p < m && b[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(b[p], b[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      if (b[i][col] == 0) continue;
      const Rational factor = b[i][col] / b[r][col];
      for (std::size_t j = col; j < m; ++j) b[i][j] -= factor * b[r][j];
    }
    ++r;
  }
  return r;
}

/// Basic by definition: no difference of two members is a positive root.
inline bool basic_by_definition(const coadj::RootSystem& sys, const std::set<coadj::Root>& d) {
  for (const auto& a : d)
    for (const auto& b : d) {
      if (a == b) continue;
      auto wa = a.weight(sys.rank()), wb = b.weight(sys.rank());
      for (std::size_t k = 0; k < wa.size(); ++k) wa[k] -= wb[k];
      if (coadj::root_from_weight(sys, wa)) return false;
    }
  return true;
}

}  // namespace oracle
