// Type-A basic subsets and basic sums: supports, derived sets and the
// single-orbit criterion, decomposition of a functional into its basic sum,
// and the achievable orbit dimensions of A_{n-1}^+.
#pragma once

#include "coadj/liealg.hpp"
#include "coadj/linalg.hpp"
#include "coadj/orbits.hpp"
#include "coadj/rational.hpp"
#include "coadj/rootsys.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coadj {

struct WrongKind : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The elimination and the rank invariants disagreed; the result was not
/// returned.
struct DecompositionUnverified : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using RootSet = std::set<Root>;
using BasicMap = std::map<Root, Rational>;

struct DecompositionResult {
  RootSet subset;
  BasicMap map;
  friend bool operator==(const DecompositionResult&, const DecompositionResult&) = default;
};

namespace detail {

inline void require_type_a(const RootSystem& sys) {
  if (sys.kind() != RootKind::A)
    throw WrongKind("basic subsets are defined for type A only, got " + sys.name());
}

}  // namespace detail

inline RootSet support(const Functional& f) {
  detail::require_type_a(f.system());
  RootSet out;
  for (std::size_t k = 0; k < f.system().size(); ++k)
    if (f.at(k) != 0) out.insert(f.system().root(k));
  return out;
}

/// No difference of two members is a positive root. For type A this means no
/// two members share a first index and no two share a second index.
inline bool is_basic(const RootSet& d) {
  for (const Root& r : d)
    if (!r.is_diff()) throw WrongKind("basic subsets contain e_i - e_j roots only");
  for (auto a = d.begin(); a != d.end(); ++a)
    for (auto b = std::next(a); b != d.end(); ++b)
      if (a->i == b->i || a->j == b->j) return false;
  return true;
}

inline RootSet singular_union(const RootSet& d) {
  RootSet out;
  for (const Root& a : d)
    for (int k = a.i + 1; k < a.j; ++k) {
      out.insert(Root::diff(a.i, k));
      out.insert(Root::diff(k, a.j));
    }
  return out;
}

inline std::size_t s_of(const RootSet& d) { return singular_union(d).size(); }

/// Calls `visit` once per basic subset of Phi+(A_{n-1}); these are the
/// placements of non-attacking rooks on the strictly upper triangle.
inline void for_each_basic_subset(int n, const std::function<void(const RootSet&)>& visit) {
  if (n < 2) throw RankError("rank n=" + std::to_string(n) + " is below the minimum 2");
  RootSet current;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::function<void(int)> row = [&](int i) {
    if (i == n) {
      visit(current);
      return;
    }
    row(i + 1);
    for (int j = i + 1; j <= n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      used[static_cast<std::size_t>(j)] = true;
      current.insert(Root::diff(i, j));
      row(i + 1);
      current.erase(Root::diff(i, j));
      used[static_cast<std::size_t>(j)] = false;
    }
  };
  row(1);
}

inline std::vector<RootSet> enumerate_basic_subsets(int n) {
  std::vector<RootSet> out;
  for_each_basic_subset(n, [&](const RootSet& d) { out.push_back(d); });
  return out;
}

/// Index sequence i_1 < ... < i_r of a chain {e_{i_1}-e_{i_2}, ...}.
using Chain = std::vector<int>;

/// Every chain contained in d (contiguous runs of consecutive roots).
inline std::vector<Chain> chains_in(const RootSet& d) {
  std::map<int, int> next;
  for (const Root& r : d) next[r.i] = r.j;
  std::vector<Chain> out;
  for (const Root& r : d) {
    Chain c{r.i, r.j};
    out.push_back(c);
    while (next.count(c.back())) {
      c.push_back(next[c.back()]);
      out.push_back(c);
    }
  }
  return out;
}

/// Whether (c, c2) is a special pair of chains with respect to d.
inline bool is_special_pair(const RootSet& d, const Chain& c, const Chain& c2) {
  if (c.size() != c2.size()) return false;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!(c[k] < c2[k])) return false;
    if (k + 1 < c.size() && !(c2[k] < c[k + 1])) return false;
  }
  for (const Root& r : d) {
    // A root ending at the first index of c2 must start after c's first index.
    if (r.j == c2.front() && !(c.front() < r.i)) return false;
    // A root leaving the last index of c must land before c2's last index.
    if (r.i == c.back() && !(r.j < c2.back())) return false;
  }
  return true;
}

/// All d-derived roots e_{i_1} - e_{j_1} over special pairs of chains.
inline RootSet derived_set(const RootSet& d) {
  const auto chains = chains_in(d);
  RootSet out;
  for (const Chain& c : chains)
    for (const Chain& c2 : chains)
      if (is_special_pair(d, c, c2)) out.insert(Root::diff(c.front(), c2.front()));
  return out;
}

inline bool is_single_orbit(const RootSet& d) { return derived_set(d).empty(); }

/// sum over alpha in d of phi(alpha) e_alpha^*.
inline Functional basic_sum_point(const RootSystem& sys, const BasicMap& phi) {
  detail::require_type_a(sys);
  return Functional::from_map(sys, phi);
}

namespace detail {

/// rank of the block rows 1..i, columns j..n of the coordinate array.
inline std::size_t corner_rank(const std::vector<std::vector<Rational>>& x, int n, int i, int j) {
  if (i < 1 || j > n || i >= j) return 0;
  RationalMatrix m(static_cast<std::size_t>(i), static_cast<std::size_t>(n - j + 1));
  for (int r = 1; r <= i; ++r)
    for (int c = j; c <= n; ++c)
      m(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - j)) =
          x[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  return rank(std::move(m));
}

}  // namespace detail

/// Pivot positions predicted by the corner ranks r(i, j) = rank X[1..i, j..n],
/// which the coadjoint action leaves unchanged.
inline RootSet rank_pivots(const Functional& f) {
  detail::require_type_a(f.system());
  const int n = f.system().rank();
  std::vector<std::vector<Rational>> x(static_cast<std::size_t>(n) + 1,
                                       std::vector<Rational>(static_cast<std::size_t>(n) + 1));
  for (const auto& [r, v] : f.nonzero()) x[static_cast<std::size_t>(r.i)][static_cast<std::size_t>(r.j)] = v;
  RootSet out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const auto rk = [&](int a, int b) { return static_cast<long>(detail::corner_rank(x, n, a, b)); };
      if (rk(i, j) - rk(i - 1, j) - rk(i, j + 1) + rk(i - 1, j + 1) == 1) out.insert(Root::diff(i, j));
    }
  return out;
}

/// Unique (D, phi) with f in O_D(phi). The coordinate array X[i][j] = f(e_ij)
/// is reduced by the moves the two-sided unitriangular action allows: add a
/// multiple of an upper row to a lower one, or of a right column to a left
/// one, dropping whatever lands on or below the diagonal. Each row, top to
/// bottom, pivots on its rightmost nonzero entry.
inline DecompositionResult decompose(const Functional& f) {
  detail::require_type_a(f.system());
  const int n = f.system().rank();
  const auto N = static_cast<std::size_t>(n);
  std::vector<std::vector<Rational>> x(N + 1, std::vector<Rational>(N + 1));
  for (const auto& [r, v] : f.nonzero()) x[static_cast<std::size_t>(r.i)][static_cast<std::size_t>(r.j)] = v;

  DecompositionResult out;
  for (std::size_t i = 1; i <= N; ++i) {
    std::size_t pivot = 0;
    for (std::size_t c = N; c > i; --c)
      if (x[i][c] != 0) {
        pivot = c;
        break;
      }
    if (pivot == 0) continue;
    const Rational p = x[i][pivot];
    // Clear the pivot column below row i using row i.
    for (std::size_t r = i + 1; r < pivot; ++r) {
      if (x[r][pivot] == 0) continue;
      const Rational factor = x[r][pivot] / p;
      for (std::size_t c = r + 1; c <= N; ++c)
        if (x[i][c] != 0) x[r][c] -= factor * x[i][c];
    }
    // Clear row i left of the pivot using the pivot column, now zero below i.
    for (std::size_t c = i + 1; c < pivot; ++c) x[i][c] = 0;
    out.subset.insert(Root::diff(static_cast<int>(i), static_cast<int>(pivot)));
    out.map.emplace(Root::diff(static_cast<int>(i), static_cast<int>(pivot)), p);
  }

  if (out.subset != rank_pivots(f))
    throw DecompositionUnverified("pivot elimination and rank invariants disagree");
  return out;
}

/// Largest m with an orbit of dimension 2m: (n-2)n/4 for even n, (n-1)^2/4 for odd n.
inline int max_weyl_index(int n) {
  if (n < 2) throw RankError("rank n=" + std::to_string(n) + " is below the minimum 2");
  return n % 2 == 0 ? (n - 2) * n / 4 : (n - 1) * (n - 1) / 4;
}

inline int max_dimension(int n) { return 2 * max_weyl_index(n); }

inline std::vector<int> achievable_dimensions(int n) {
  std::vector<int> out;
  for (int m = 0; m <= max_weyl_index(n); ++m) out.push_back(2 * m);
  return out;
}

/// Index m of the Weyl algebra A_m attached to each achievable dimension 2m.
inline std::vector<int> weyl_indices(int n) {
  std::vector<int> out;
  for (int m = 0; m <= max_weyl_index(n); ++m) out.push_back(m);
  return out;
}

/// For each m = 0..max, a basic subset with empty derived set and s = 2m.
/// Singletons widening from the middle cover m <= n-2; larger m adds
/// e_1 - e_n to a shifted witness for n-2.
inline std::vector<std::pair<int, RootSet>> witness_basic_subsets(int n) {
  if (n < 2) throw RankError("rank n=" + std::to_string(n) + " is below the minimum 2");
  std::vector<std::pair<int, RootSet>> out;
  int lo = 0, hi = 0;
  if (n % 2 == 0) {
    lo = n / 2;
    hi = n / 2 + 1;
  } else {
    lo = (n + 1) / 2;
    hi = lo + 1;
  }
  // Even n widens to the right first, odd n to the left first.
  bool right = n % 2 == 0;
  for (int m = 0; m <= n - 2; ++m) {
    out.emplace_back(m, RootSet{Root::diff(lo, hi)});
    if (right) ++hi;
    else --lo;
    right = !right;
  }
  if (n >= 4) {
    for (const auto& [m, inner] : witness_basic_subsets(n - 2)) {
      if (m == 0) continue;
      RootSet d{Root::diff(1, n)};
      for (const Root& r : inner) d.insert(Root::diff(r.i + 1, r.j + 1));
      out.emplace_back(n - 2 + m, std::move(d));
    }
  }
  return out;
}

/// {e_1 - e_n, e_2 - e_{n-1}, ...} down to the middle.
inline RootSet max_singular_witness(int n) {
  if (n < 2) throw RankError("rank n=" + std::to_string(n) + " is below the minimum 2");
  RootSet d;
  for (int i = 1, j = n; i < j; ++i, --j) d.insert(Root::diff(i, j));
  return d;
}

}  // namespace coadj
