// Positive root systems of types A, B, D, their matrix root vectors, and the
// bracket table derived from those matrices.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace coadj {

enum class RootKind : std::uint8_t { A, B, D };

inline char kind_letter(RootKind k) {
  switch (k) {
    case RootKind::A: return 'A';
    case RootKind::B: return 'B';
    case RootKind::D: return 'D';
  }
  return '?';
}

inline RootKind parse_kind(std::string_view s) {
  if (s == "A" || s == "a") return RootKind::A;
  if (s == "B" || s == "b") return RootKind::B;
  if (s == "D" || s == "d") return RootKind::D;
  throw std::invalid_argument("unknown root system kind: '" + std::string(s) + "'");
}

struct RankError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct InvalidRoot : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when a commutator of root vectors is not a multiple of a single root
/// vector. Never expected to fire for the realizations shipped here.
struct InconsistentBracket : std::logic_error {
  using std::logic_error::logic_error;
};

/// A positive root e_i - e_j (Diff), e_i (Short) or e_i + e_j (Sum), with
/// 1-based indices. For Short roots j is 0.
struct Root {
  enum class Form : std::uint8_t { Diff, Short, Sum };

  Form form = Form::Diff;
  int i = 0;
  int j = 0;

  static constexpr Root diff(int i, int j) { return {Form::Diff, i, j}; }
  static constexpr Root shortr(int i) { return {Form::Short, i, 0}; }
  static constexpr Root sum(int i, int j) { return {Form::Sum, i, j}; }

  bool is_diff() const { return form == Form::Diff; }
  bool is_short() const { return form == Form::Short; }
  bool is_sum() const { return form == Form::Sum; }

  /// Sort key of the canonical ordering: Diff by (j-i, i), Short by i,
  /// Sum by (i+j, i).
  std::tuple<int, int, int> order_key() const {
    switch (form) {
      case Form::Diff: return {0, j - i, i};
      case Form::Short: return {1, i, 0};
      case Form::Sum: return {2, i + j, i};
    }
    return {3, 0, 0};
  }

  friend bool operator==(const Root& a, const Root& b) {
    return a.form == b.form && a.i == b.i && a.j == b.j;
  }
  friend std::strong_ordering operator<=>(const Root& a, const Root& b) {
    return a.order_key() <=> b.order_key();
  }

  /// Coefficient vector in the e_1..e_n basis (index 0 unused).
  std::vector<int> weight(int n) const {
    std::vector<int> w(static_cast<std::size_t>(n) + 1, 0);
    w[static_cast<std::size_t>(i)] += 1;
    if (form == Form::Diff) w[static_cast<std::size_t>(j)] -= 1;
    if (form == Form::Sum) w[static_cast<std::size_t>(j)] += 1;
    return w;
  }
};

inline std::string to_string(const Root& r) {
  switch (r.form) {
    case Root::Form::Diff: return "e" + std::to_string(r.i) + "-e" + std::to_string(r.j);
    case Root::Form::Short: return "e" + std::to_string(r.i);
    case Root::Form::Sum: return "e" + std::to_string(r.i) + "+e" + std::to_string(r.j);
  }
  return "?";
}

/// LaTeX rendering, e.g. "\epsilon_1-\epsilon_3".
inline std::string to_latex(const Root& r) {
  auto eps = [](int k) { return "\\epsilon_{" + std::to_string(k) + "}"; };
  switch (r.form) {
    case Root::Form::Diff: return eps(r.i) + "-" + eps(r.j);
    case Root::Form::Short: return eps(r.i);
    case Root::Form::Sum: return eps(r.i) + "+" + eps(r.j);
  }
  return "?";
}

/// Parses "e1-e4", "e2", "e1+e3" (also accepts "eps" or "ε" free spellings
/// like "e_1-e_4"). Index validity against a system is checked separately.
inline Root parse_root(std::string_view text) {
  auto fail = [&] { throw InvalidRoot("malformed root: '" + std::string(text) + "'"); };
  std::size_t pos = 0;
  auto index = [&]() -> int {
    if (pos >= text.size() || text[pos] != 'e') fail();
    ++pos;
    if (pos < text.size() && text[pos] == '_') ++pos;
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (start == pos || pos - start > 6) fail();
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  int i = index();
  if (pos == text.size()) return Root::shortr(i);
  char op = text[pos++];
  int j = index();
  if (pos != text.size()) fail();
  if (op == '-') return Root::diff(i, j);
  if (op == '+') return Root::sum(i, j);
  fail();
  return {};
}

/// Sparse integer matrix with 1-based (row, col) keys.
struct MatrixRealization {
  int dim = 0;
  std::map<std::pair<int, int>, int> entries;

  int at(int r, int c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? 0 : it->second;
  }
  friend bool operator==(const MatrixRealization&, const MatrixRealization&) = default;
};

inline MatrixRealization commutator(const MatrixRealization& x, const MatrixRealization& y) {
  MatrixRealization out{x.dim, {}};
  auto accumulate = [&](const MatrixRealization& p, const MatrixRealization& q, int sign) {
    for (const auto& [pk, pv] : p.entries)
      for (const auto& [qk, qv] : q.entries)
        if (pk.second == qk.first) out.entries[{pk.first, qk.second}] += sign * pv * qv;
  };
  accumulate(x, y, 1);
  accumulate(y, x, -1);
  std::erase_if(out.entries, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// One slot of the bracket table: [e_a, e_b] = coef * e_result, or absent.
struct BracketValue {
  int coef = 0;
  Root result;
  friend bool operator==(const BracketValue&, const BracketValue&) = default;
};

namespace detail {

struct RootSystemData {
  RootKind kind;
  int n;
  std::vector<Root> roots;
  std::map<Root, std::size_t> index;
  std::vector<MatrixRealization> vectors;
  // Dense |roots|^2 table; result == npos means the bracket vanishes.
  std::vector<int> coef;
  std::vector<std::size_t> result;
};

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

}  // namespace detail

/// Immutable handle to a positive root system together with its root vectors
/// and bracket table. Cheap to copy; copies share the same data.
class RootSystem {
 public:
  static constexpr std::size_t npos = detail::npos;

  RootSystem() = default;

  RootKind kind() const { return d_->kind; }
  int rank() const { return d_->n; }
  std::size_t size() const { return d_->roots.size(); }
  const std::vector<Root>& roots() const { return d_->roots; }
  const Root& root(std::size_t ordinal) const { return d_->roots.at(ordinal); }

  bool contains(const Root& r) const { return d_->index.count(r) != 0; }

  std::size_t ordinal(const Root& r) const {
    auto it = d_->index.find(r);
    if (it == d_->index.end())
      throw InvalidRoot("root " + to_string(r) + " is not in " + name());
    return it->second;
  }

  /// Ordinal of a root given its weight, or npos.
  std::size_t find(const Root& r) const {
    auto it = d_->index.find(r);
    return it == d_->index.end() ? npos : it->second;
  }

  /// Matrix side: n for A, 2n+1 for B, 2n for D.
  int matrix_dim() const {
    switch (d_->kind) {
      case RootKind::A: return d_->n;
      case RootKind::B: return 2 * d_->n + 1;
      case RootKind::D: return 2 * d_->n;
    }
    return 0;
  }

  const MatrixRealization& vector(std::size_t ordinal) const { return d_->vectors.at(ordinal); }

  /// Ordinal-level bracket lookup; returns npos in `result` when zero.
  std::pair<int, std::size_t> bracket_index(std::size_t a, std::size_t b) const {
    std::size_t slot = a * size() + b;
    return {d_->coef[slot], d_->result[slot]};
  }

  std::string name() const {
    // A_{n-1}^+ for type A so that n always denotes the matrix side.
    int label = d_->kind == RootKind::A ? d_->n - 1 : d_->n;
    return std::string(1, kind_letter(d_->kind)) + std::to_string(label) + "+";
  }

  friend bool operator==(const RootSystem& a, const RootSystem& b) {
    return a.d_ == b.d_ || (a.kind() == b.kind() && a.rank() == b.rank());
  }

 private:
  friend RootSystem positive_roots(RootKind kind, int n);
  explicit RootSystem(std::shared_ptr<const detail::RootSystemData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::RootSystemData> d_;
};

inline bool root_valid(RootKind kind, int n, const Root& r) {
  switch (r.form) {
    case Root::Form::Diff: return 1 <= r.i && r.i < r.j && r.j <= n;
    case Root::Form::Short: return kind == RootKind::B && 1 <= r.i && r.i <= n && r.j == 0;
    case Root::Form::Sum: return kind != RootKind::A && 1 <= r.i && r.i < r.j && r.j <= n;
  }
  return false;
}

/// Matrix root vector e_alpha: E_ij for type A, and the antidiagonally
/// antisymmetric pairs for B (side 2n+1) and D (side 2n).
inline MatrixRealization root_vector(RootKind kind, int n, const Root& a) {
  if (!root_valid(kind, n, a))
    throw InvalidRoot("root " + to_string(a) + " is not valid for kind " + kind_letter(kind) +
                      ", n=" + std::to_string(n));
  MatrixRealization m;
  auto put = [&](int r, int c, int v) { m.entries[{r, c}] += v; };
  const int i = a.i, j = a.j;
  switch (kind) {
    case RootKind::A:
      m.dim = n;
      put(i, j, 1);
      break;
    case RootKind::B: {
      m.dim = 2 * n + 1;
      const int s = 2 * n + 2;
      if (a.is_diff()) {
        put(i, j, 1);
        put(s - j, s - i, -1);
      } else if (a.is_short()) {
        put(i, n + 1, 1);
        put(n + 1, s - i, -1);
      } else {
        put(i, s - j, 1);
        put(j, s - i, -1);
      }
      break;
    }
    case RootKind::D: {
      m.dim = 2 * n;
      const int s = 2 * n + 1;
      if (a.is_diff()) {
        put(i, j, 1);
        put(s - j, s - i, -1);
      } else {
        put(i, s - j, 1);
        put(j, s - i, -1);
      }
      break;
    }
  }
  return m;
}

/// Builds the positive roots in canonical order together with root vectors and
/// the full bracket table.
inline RootSystem positive_roots(RootKind kind, int n) {
  if (n < 2)
    throw RankError("rank n=" + std::to_string(n) + " is below the minimum 2 for kind " +
                    kind_letter(kind));
  auto d = std::make_shared<detail::RootSystemData>();
  d->kind = kind;
  d->n = n;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) d->roots.push_back(Root::diff(i, j));
  if (kind == RootKind::B)
    for (int i = 1; i <= n; ++i) d->roots.push_back(Root::shortr(i));
  if (kind != RootKind::A)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) d->roots.push_back(Root::sum(i, j));
  std::sort(d->roots.begin(), d->roots.end());
  for (std::size_t k = 0; k < d->roots.size(); ++k) {
    d->index.emplace(d->roots[k], k);
    d->vectors.push_back(root_vector(kind, n, d->roots[k]));
  }

  // Every matrix position used by some root vector belongs to exactly one root.
  std::map<std::pair<int, int>, std::pair<std::size_t, int>> owner;
  for (std::size_t k = 0; k < d->roots.size(); ++k)
    for (const auto& [pos, v] : d->vectors[k].entries) owner[pos] = {k, v};

  const std::size_t count = d->roots.size();
  d->coef.assign(count * count, 0);
  d->result.assign(count * count, detail::npos);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      MatrixRealization c = commutator(d->vectors[a], d->vectors[b]);
      if (c.entries.empty()) continue;
      const auto& [pos, val] = *c.entries.begin();
      auto it = owner.find(pos);
      if (it == owner.end() || val % it->second.second != 0)
        throw InconsistentBracket("commutator of " + to_string(d->roots[a]) + " and " +
                                  to_string(d->roots[b]) + " is outside the root-vector basis");
      const auto [target, sign] = it->second;
      const int coef = val / sign;
      for (const auto& [p, v] : d->vectors[target].entries)
        if (c.at(p.first, p.second) != coef * v)
          throw InconsistentBracket("commutator of " + to_string(d->roots[a]) + " and " +
                                    to_string(d->roots[b]) + " is not a multiple of " +
                                    to_string(d->roots[target]));
      if (c.entries.size() != d->vectors[target].entries.size())
        throw InconsistentBracket("commutator of " + to_string(d->roots[a]) + " and " +
                                  to_string(d->roots[b]) + " has stray entries");
      d->coef[a * count + b] = coef;
      d->result[a * count + b] = target;
    }
  }
  return RootSystem(std::move(d));
}

inline MatrixRealization root_vector(const RootSystem& sys, const Root& a) {
  return sys.vector(sys.ordinal(a));
}

/// [e_a, e_b] as (coefficient, root), or nullopt when the bracket vanishes.
inline std::optional<BracketValue> bracket(const RootSystem& sys, const Root& a, const Root& b) {
  auto [coef, res] = sys.bracket_index(sys.ordinal(a), sys.ordinal(b));
  if (res == RootSystem::npos) return std::nullopt;
  return BracketValue{coef, sys.root(res)};
}

/// Full table over ordered pairs, keyed by roots.
using BracketTable = std::map<std::pair<Root, Root>, std::optional<BracketValue>>;

inline BracketTable structure_table(const RootSystem& sys) {
  BracketTable table;
  for (const Root& a : sys.roots())
    for (const Root& b : sys.roots()) table.emplace(std::pair{a, b}, bracket(sys, a, b));
  return table;
}

/// Root whose weight equals the given one, if it is positive in `sys`.
inline std::optional<Root> root_from_weight(const RootSystem& sys, const std::vector<int>& w) {
  std::vector<std::pair<int, int>> nz;
  for (std::size_t k = 1; k < w.size(); ++k)
    if (w[k] != 0) nz.emplace_back(static_cast<int>(k), w[k]);
  Root r;
  if (nz.size() == 1 && nz[0].second == 1) {
    r = Root::shortr(nz[0].first);
  } else if (nz.size() == 2 && nz[0].second == 1 && nz[1].second == -1) {
    r = Root::diff(nz[0].first, nz[1].first);
  } else if (nz.size() == 2 && nz[0].second == 1 && nz[1].second == 1) {
    r = Root::sum(nz[0].first, nz[1].first);
  } else {
    return std::nullopt;
  }
  if (!sys.contains(r)) return std::nullopt;
  return r;
}

}  // namespace coadj
