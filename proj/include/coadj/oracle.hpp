// Brute-force verification harness: seeded orbit sampling, exhaustive small-n
// scans, and empirical certification of the sign rule in the Sum-root charts.
#pragma once

#include "coadj/basic.hpp"
#include "coadj/io.hpp"
#include "coadj/liealg.hpp"
#include "coadj/orbits.hpp"
#include "coadj/rational.hpp"
#include "coadj/rootsys.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coadj {

struct UnknownSuite : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct AmbiguousConvention : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed;

/// Seeded generator. Draws go through plain modular reduction so that streams
/// are identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  std::size_t index(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }

  /// Uniform over {-3, ..., 3} \ {0}.
  int small_nonzero() {
    int v = static_cast<int>(engine_() % 6);
    return v < 3 ? v - 3 : v - 2;
  }

  /// p/q with p in {-3..3}\{0}, q in {1, 2, 3}.
  Rational nonzero_rational() {
    Rational q(small_nonzero(), static_cast<int>(engine_() % 3) + 1);
    q.canonicalize();
    return q;
  }

  GroupWord word(const RootSystem& sys, std::size_t length) {
    GroupWord w;
    for (std::size_t k = 0; k < length; ++k) w.then(sys.root(index(sys.size())), Rational(small_nonzero()));
    return w;
  }

 private:
  std::mt19937_64 engine_;
};

/// Per-trial seed derived from a suite seed and a counter (splitmix64 step).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (counter + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::size_t default_word_length(const RootSystem& sys) { return 2 * sys.size(); }

/// (w . (c e_alpha^*), w) for a seeded random word w.
inline std::pair<Functional, GroupWord> random_orbit_point(const RootSystem& sys, const Root& alpha,
                                                           const Rational& c, std::uint64_t seed,
                                                           std::size_t word_length) {
  if (c == 0) throw ZeroScalar("orbit scalar c must be nonzero");
  Sampler rng(seed);
  GroupWord w = rng.word(sys, word_length);
  return {coadjoint_apply(w, Functional::dual_basis(sys, alpha, c)), w};
}

inline std::pair<Functional, GroupWord> random_orbit_point(const RootSystem& sys, const Root& alpha,
                                                           const Rational& c, std::uint64_t seed) {
  return random_orbit_point(sys, alpha, c, seed, default_word_length(sys));
}

inline json to_json(const GroupWord& w) {
  json out = json::array();
  for (const auto& l : w.letters) out.push_back({to_string(l.root), to_string(l.t)});
  return out;
}

struct SignConvention {
  std::map<RootKind, SignRule> rules;
  friend bool operator==(const SignConvention&, const SignConvention&) = default;
};

/// For each kind B, D: tests every candidate rule on all Sum roots,
/// 3 <= n <= n_max, `samples` random orbit points each, and keeps the rules
/// with no failure. Exactly one must survive per kind.
inline SignConvention resolve_sign_conventions(int n_max, std::uint64_t seed = kDefaultSeed,
                                               int samples = 50) {
  if (n_max < 3) throw RankError("sign resolution needs n_max >= 3");
  SignConvention out;
  for (RootKind kind : {RootKind::B, RootKind::D}) {
    std::vector<SignRule> survivors;
    for (SignRule rule : kAllSignRules) {
      bool ok = true;
      std::uint64_t counter = 0;
      for (int n = 3; n <= n_max && ok; ++n) {
        const RootSystem sys = positive_roots(kind, n);
        for (const Root& alpha : sys.roots()) {
          if (!alpha.is_sum()) continue;
          const OrbitChart chart = orbit_chart(sys, alpha, 1, rule);
          for (int t = 0; t < samples && ok; ++t) {
            auto [f, w] = random_orbit_point(sys, alpha, 1, derive_seed(seed, counter++));
            ok = contains(chart, f);
          }
          if (!ok) break;
        }
      }
      if (ok) survivors.push_back(rule);
    }
    if (survivors.size() != 1) {
      std::string names;
      for (SignRule r : survivors) names += (names.empty() ? "" : ", ") + to_string(r);
      throw AmbiguousConvention(std::string("type ") + kind_letter(kind) + ": " +
                                std::to_string(survivors.size()) + " sign rules survive up to n=" +
                                std::to_string(n_max) + (names.empty() ? "" : " (" + names + ")"));
    }
    out.rules[kind] = survivors.front();
  }
  return out;
}

struct OracleReport {
  std::string check_name;
  std::optional<RootKind> kind;
  std::optional<int> n;
  json parameters = json::object();
  long trials = 0;
  std::vector<json> failures;
  json summary = json::object();

  bool pass() const { return failures.empty(); }

  json to_json() const {
    json f = json::array();
    for (const auto& x : failures) f.push_back(x);
    return {{"check_name", check_name},
            {"kind", kind ? json(std::string(1, kind_letter(*kind))) : json(nullptr)},
            {"n", n ? json(*n) : json(nullptr)},
            {"parameters", parameters},
            {"trials", trials},
            {"failures", f},
            {"summary", summary},
            {"verdict", pass() ? "pass" : "fail"}};
  }
};

struct SuiteConfig {
  std::optional<RootKind> kind;
  std::optional<int> n;      // a single rank; overrides max_n
  std::optional<int> max_n;  // defaults per suite
  std::optional<Root> alpha;
  std::uint64_t seed = kDefaultSeed;
  std::optional<int> trials;  // per unit; defaults per suite
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"chart-soundness", "dimension-formulas",
                                                 "decompose-roundtrip", "single-orbit-scan",
                                                 "two-dim-support", "achievable-dims"};
  return names;
}

namespace detail {

inline std::vector<int> ranks(const SuiteConfig& cfg, int lo, int default_max) {
  if (cfg.n) return {*cfg.n};
  std::vector<int> out;
  for (int n = lo; n <= cfg.max_n.value_or(default_max); ++n) out.push_back(n);
  return out;
}

inline std::vector<RootKind> kinds(const SuiteConfig& cfg) {
  if (cfg.kind) return {*cfg.kind};
  return {RootKind::A, RootKind::B, RootKind::D};
}

inline json roots_json(const RootSet& d) {
  json out = json::array();
  for (const Root& r : d) out.push_back(to_string(r));
  return out;
}

inline json base_parameters(const SuiteConfig& cfg, const std::vector<int>& ns) {
  json p = {{"seed", cfg.seed}, {"ranks", ns}};
  if (cfg.alpha) p["alpha"] = to_string(*cfg.alpha);
  return p;
}

/// Random basic subset: each row picks a free column or stays empty.
inline RootSet random_basic_subset(Sampler& rng, int n) {
  RootSet d;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i < n; ++i) {
    std::vector<int> free;
    for (int j = i + 1; j <= n; ++j)
      if (!used[static_cast<std::size_t>(j)]) free.push_back(j);
    std::size_t pick = rng.index(free.size() + 1);
    if (pick == free.size()) continue;
    used[static_cast<std::size_t>(free[pick])] = true;
    d.insert(Root::diff(i, free[pick]));
  }
  return d;
}

inline BasicMap random_phi(Sampler& rng, const RootSet& d) {
  BasicMap phi;
  for (const Root& r : d) phi[r] = rng.nonzero_rational();
  return phi;
}

inline OracleReport chart_soundness(const SuiteConfig& cfg) {
  OracleReport rep;
  rep.check_name = "chart-soundness";
  rep.kind = cfg.kind;
  const auto ns = ranks(cfg, 2, 4);
  if (cfg.n) rep.n = *cfg.n;
  const int trials = cfg.trials.value_or(100);
  rep.parameters = base_parameters(cfg, ns);
  rep.parameters["trials_per_root"] = trials;
  rep.parameters["scalars"] = {"1", "2", "-3/5"};
  const Rational scalars[] = {Rational(1), Rational(2), Rational(-3, 5)};
  std::uint64_t counter = 0;
  for (RootKind kind : kinds(cfg))
    for (int n : ns) {
      const RootSystem sys = positive_roots(kind, n);
      for (const Root& alpha : sys.roots()) {
        if (cfg.alpha && !(*cfg.alpha == alpha)) continue;
        for (int t = 0; t < trials; ++t) {
          const Rational& c = scalars[static_cast<std::size_t>(t) % 3];
          const OrbitChart chart = orbit_chart(sys, alpha, c);
          const std::uint64_t seed = derive_seed(cfg.seed, counter++);
          auto [f, w] = random_orbit_point(sys, alpha, c, seed);
          ++rep.trials;
          if (!contains(chart, f))
            rep.failures.push_back({{"kind", std::string(1, kind_letter(kind))},
                                    {"n", n},
                                    {"alpha", to_string(alpha)},
                                    {"c", to_string(c)},
                                    {"seed", seed},
                                    {"word", to_json(w)},
                                    {"functional", coadj::to_json(f)}});
        }
      }
    }
  rep.summary["sign_rule"] = to_string(kCertifiedSignRule);
  return rep;
}

inline OracleReport dimension_formulas(const SuiteConfig& cfg) {
  OracleReport rep;
  rep.check_name = "dimension-formulas";
  rep.kind = cfg.kind;
  const auto ns = ranks(cfg, 2, 6);
  if (cfg.n) rep.n = *cfg.n;
  rep.parameters = base_parameters(cfg, ns);
  rep.parameters["scalars"] = {"1", "2", "-3/5"};
  const Rational scalars[] = {Rational(1), Rational(2), Rational(-3, 5)};
  for (RootKind kind : kinds(cfg))
    for (int n : ns) {
      const RootSystem sys = positive_roots(kind, n);
      const std::size_t expected_count =
          kind == RootKind::A ? static_cast<std::size_t>(n * (n - 1) / 2)
                              : static_cast<std::size_t>(kind == RootKind::B ? n * n : n * n - n);
      ++rep.trials;
      if (sys.size() != expected_count)
        rep.failures.push_back({{"kind", std::string(1, kind_letter(kind))},
                                {"n", n},
                                {"check", "root-count"},
                                {"got", sys.size()},
                                {"expected", expected_count}});
      for (const Root& alpha : sys.roots()) {
        if (cfg.alpha && !(*cfg.alpha == alpha)) continue;
        const SingularData d = singular_set(sys, alpha);
        const std::size_t formula = singular_count(kind, n, alpha);
        ++rep.trials;
        if (d.singular.size() != formula || d.singular.size() + d.regular.size() != sys.size())
          rep.failures.push_back({{"kind", std::string(1, kind_letter(kind))},
                                  {"n", n},
                                  {"alpha", to_string(alpha)},
                                  {"check", "singular-count"},
                                  {"got", d.singular.size()},
                                  {"expected", formula}});
        for (const Rational& c : scalars) {
          ++rep.trials;
          const std::size_t dim = orbit_dimension(Functional::dual_basis(sys, alpha, c));
          if (dim != formula)
            rep.failures.push_back({{"kind", std::string(1, kind_letter(kind))},
                                    {"n", n},
                                    {"alpha", to_string(alpha)},
                                    {"c", to_string(c)},
                                    {"check", "rank"},
                                    {"got", dim},
                                    {"expected", formula}});
        }
      }
    }
  return rep;
}

inline OracleReport decompose_roundtrip(const SuiteConfig& cfg) {
  OracleReport rep;
  rep.check_name = "decompose-roundtrip";
  rep.kind = RootKind::A;
  const auto ns = ranks(cfg, 2, 6);
  if (cfg.n) rep.n = *cfg.n;
  const int trials = cfg.trials.value_or(200);
  rep.parameters = base_parameters(cfg, ns);
  rep.parameters["trials_per_rank"] = trials;
  std::uint64_t counter = 0;
  for (int n : ns) {
    const RootSystem sys = positive_roots(RootKind::A, n);
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t seed = derive_seed(cfg.seed, counter++);
      Sampler rng(seed);
      const RootSet d = random_basic_subset(rng, n);
      const BasicMap phi = random_phi(rng, d);
      const GroupWord w = rng.word(sys, default_word_length(sys));
      const Functional f = coadjoint_apply(w, basic_sum_point(sys, phi));
      ++rep.trials;
      json record = {{"n", n}, {"seed", seed}, {"basic", basic_to_json(n, d, phi)}, {"word", to_json(w)}};
      try {
        const DecompositionResult got = decompose(f);
        if (got.subset != d || got.map != phi) {
          record["got"] = basic_to_json(n, got.subset, got.map);
          rep.failures.push_back(record);
        }
      } catch (const DecompositionUnverified& e) {
        record["error"] = e.what();
        rep.failures.push_back(record);
      }
    }
  }
  return rep;
}

inline OracleReport single_orbit_scan(const SuiteConfig& cfg) {
  OracleReport rep;
  rep.check_name = "single-orbit-scan";
  rep.kind = RootKind::A;
  const auto ns = ranks(cfg, 2, 5);
  if (cfg.n) rep.n = *cfg.n;
  const int random_maps = cfg.trials.value_or(20);
  rep.parameters = base_parameters(cfg, ns);
  rep.parameters["random_maps_per_subset"] = random_maps;
  std::uint64_t counter = 0;
  long single = 0, multiple = 0;
  for (int n : ns) {
    const RootSystem sys = positive_roots(RootKind::A, n);
    for_each_basic_subset(n, [&](const RootSet& d) {
      const bool empty_derived = derived_set(d).empty();
      (empty_derived ? single : multiple) += 1;
      const std::size_t s = s_of(d);
      Sampler rng(derive_seed(cfg.seed, counter++));
      for (int t = 0; t <= random_maps; ++t) {
        BasicMap phi;
        for (const Root& r : d) phi[r] = t == 0 ? Rational(1) : rng.nonzero_rational();
        const std::size_t dim = orbit_dimension(basic_sum_point(sys, phi));
        ++rep.trials;
        const bool ok = empty_derived ? dim == s : dim < s;
        if (!ok)
          rep.failures.push_back({{"basic", basic_to_json(n, d, phi)},
                                  {"s", s},
                                  {"orbit_dimension", dim},
                                  {"derived", roots_json(derived_set(d))}});
      }
    });
  }
  rep.summary["single_orbit_subsets"] = single;
  rep.summary["multi_orbit_subsets"] = multiple;
  return rep;
}

inline OracleReport two_dim_support(const SuiteConfig& cfg) {
  OracleReport rep;
  rep.check_name = "two-dim-support";
  rep.kind = RootKind::A;
  const auto ns = ranks(cfg, 4, 6);
  if (cfg.n) rep.n = *cfg.n;
  const int trials = cfg.trials.value_or(100);
  rep.parameters = base_parameters(cfg, ns);
  rep.parameters["trials_per_rank"] = trials;
  std::uint64_t counter = 0;
  long two_dim_seen = 0;
  for (int n : ns) {
    const RootSystem sys = positive_roots(RootKind::A, n);
    std::vector<Root> long_roots;
    for (const Root& r : sys.roots())
      if (r.j - r.i > 2) long_roots.push_back(r);
    for (int t = 0; t < trials && !long_roots.empty(); ++t) {
      const std::uint64_t seed = derive_seed(cfg.seed, counter++);
      Sampler rng(seed);
      // Sparse random functional forced nonzero at one long root.
      std::vector<Rational> v(sys.size());
      for (auto& x : v)
        if (rng.index(3) == 0) x = rng.small_nonzero();
      const Root forced = long_roots[rng.index(long_roots.size())];
      v[sys.ordinal(forced)] = rng.small_nonzero();
      const Functional f(sys, std::move(v));
      ++rep.trials;
      const std::size_t dim = orbit_dimension(f);
      if (dim < 4)
        rep.failures.push_back({{"check", "long-root-support"},
                                {"seed", seed},
                                {"functional", coadj::to_json(f)},
                                {"orbit_dimension", dim}});
    }
    // Two-dimensional orbits sampled generatively have s(D) in {2, 3}.
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t seed = derive_seed(cfg.seed, counter++);
      Sampler rng(seed);
      RootSet d;
      const int i = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(n - 2)));
      d.insert(Root::diff(i, i + 2));
      if (rng.index(2) == 0) {
        // Optionally add a root of length <= 2 that keeps d basic.
        std::vector<Root> extra;
        for (const Root& r : sys.roots()) {
          if (r.j - r.i > 2) continue;
          RootSet e = d;
          e.insert(r);
          if (e.size() == 2 && is_basic(e)) extra.push_back(r);
        }
        if (!extra.empty()) d.insert(extra[rng.index(extra.size())]);
      }
      const BasicMap phi = random_phi(rng, d);
      const GroupWord w = rng.word(sys, default_word_length(sys));
      const Functional f = coadjoint_apply(w, basic_sum_point(sys, phi));
      if (orbit_dimension(f) != 2) continue;
      ++two_dim_seen;
      ++rep.trials;
      const DecompositionResult dec = decompose(f);
      const std::size_t s = s_of(dec.subset);
      if (s != 2 && s != 3)
        rep.failures.push_back({{"check", "two-dim-window"},
                                {"seed", seed},
                                {"functional", coadj::to_json(f)},
                                {"s", s}});
    }
  }
  rep.summary["two_dimensional_samples"] = two_dim_seen;
  return rep;
}

inline OracleReport achievable_dims(const SuiteConfig& cfg) {
  OracleReport rep;
  rep.check_name = "achievable-dims";
  rep.kind = RootKind::A;
  const auto ns = ranks(cfg, 2, 8);
  if (cfg.n) rep.n = *cfg.n;
  rep.parameters = base_parameters(cfg, ns);
  json per_rank = json::object();
  for (int n : ns) {
    std::set<int> seen;
    std::size_t max_s = 0;
    for_each_basic_subset(n, [&](const RootSet& d) {
      const std::size_t s = s_of(d);
      max_s = std::max(max_s, s);
      if (derived_set(d).empty()) seen.insert(static_cast<int>(s));
    });
    const std::vector<int> scanned(seen.begin(), seen.end());
    const std::vector<int> expected = achievable_dimensions(n);
    ++rep.trials;
    if (scanned != expected)
      rep.failures.push_back({{"n", n}, {"check", "achievable-set"}, {"scanned", scanned}, {"expected", expected}});
    ++rep.trials;
    if (max_s != static_cast<std::size_t>(max_dimension(n)) || s_of(max_singular_witness(n)) != max_s)
      rep.failures.push_back({{"n", n},
                              {"check", "max-s"},
                              {"scanned", max_s},
                              {"witness", s_of(max_singular_witness(n))},
                              {"expected", max_dimension(n)}});
    for (const auto& [m, d] : witness_basic_subsets(n)) {
      ++rep.trials;
      if (!derived_set(d).empty() || s_of(d) != static_cast<std::size_t>(2 * m))
        rep.failures.push_back({{"n", n}, {"check", "witness"}, {"m", m}, {"basic", basic_to_json(n, d)}});
    }
    per_rank[std::to_string(n)] = {{"dimensions", scanned}, {"weyl_indices", weyl_indices(n)}};
  }
  rep.summary = per_rank;
  return rep;
}

}  // namespace detail

inline OracleReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "chart-soundness") return detail::chart_soundness(cfg);
  if (name == "dimension-formulas") return detail::dimension_formulas(cfg);
  if (name == "decompose-roundtrip") return detail::decompose_roundtrip(cfg);
  if (name == "single-orbit-scan") return detail::single_orbit_scan(cfg);
  if (name == "two-dim-support") return detail::two_dim_support(cfg);
  if (name == "achievable-dims") return detail::achievable_dims(cfg);
  throw UnknownSuite("unknown suite '" + name + "'");
}

}  // namespace coadj
