// coadj: command-line front end for root systems, orbit charts, orbit
// dimensions, basic-subset decomposition and the verification suites.

#include "coadj/coadj.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kVerificationFailed = 2 };

struct CliConfig {
  std::string kind = "A";
  int n = 0;
  std::string format = "text";
  std::uint64_t seed = coadj::kDefaultSeed;
  std::string out;
};

struct Emitter {
  const CliConfig& cfg;
  std::ostringstream buf;

  void flush() {
    if (cfg.out.empty()) {
      std::cout << buf.str();
      return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw std::invalid_argument("cannot write " + cfg.out);
    f << buf.str();
  }
};

coadj::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  try {
    return coadj::json::parse(in);
  } catch (const coadj::json::parse_error& e) {
    throw coadj::FormatError(path + ": " + e.what());
  }
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

void add_format(CLI::App* cmd, CliConfig& cfg, std::vector<std::string> formats) {
  cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
  cmd->add_option("--out", cfg.out, "write output to this file");
}

void add_system(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--kind", cfg.kind, "root system type")->required()->check(CLI::IsMember({"A", "B", "D"}));
  cmd->add_option("--n", cfg.n, "rank parameter n")->required();
}

int cmd_roots(const CliConfig& cfg) {
  const auto sys = coadj::positive_roots(coadj::parse_kind(cfg.kind), cfg.n);
  Emitter e{cfg, {}};
  if (cfg.format == "json") {
    coadj::json arr = coadj::json::array();
    for (const auto& r : sys.roots()) arr.push_back(coadj::to_string(r));
    e.buf << arr.dump() << "\n";
  } else {
    for (std::size_t k = 0; k < sys.size(); ++k) {
      const auto& r = sys.root(k);
      e.buf << (k + 1) << "\t" << (cfg.format == "latex" ? coadj::to_latex(r) : coadj::to_string(r)) << "\n";
    }
  }
  e.flush();
  return kOk;
}

int cmd_chart(const CliConfig& cfg, const std::string& alpha, const std::string& c) {
  const auto sys = coadj::positive_roots(coadj::parse_kind(cfg.kind), cfg.n);
  const auto chart = coadj::orbit_chart(sys, coadj::parse_root(alpha), coadj::parse_rational(c));
  Emitter e{cfg, {}};
  if (cfg.format == "json") {
    e.buf << coadj::to_json(chart).dump(2) << "\n";
  } else {
    const auto lines = cfg.format == "latex" ? coadj::render_chart_latex(chart) : coadj::render_chart_text(chart);
    for (const auto& l : lines) e.buf << l << "\n";
    std::string singular;
    for (const auto& r : chart.data().singular)
      singular += (singular.empty() ? "" : ", ") + (cfg.format == "latex" ? coadj::to_latex(r) : coadj::to_string(r));
    if (!singular.empty()) e.buf << (cfg.format == "latex" ? "% arbitrary: " : "arbitrary: ") << singular << "\n";
  }
  e.flush();
  return kOk;
}

int cmd_dim(const CliConfig& cfg, const std::string& file) {
  const auto f = coadj::functional_from_json(read_json_file(file));
  const auto dim = coadj::orbit_dimension(f);
  Emitter e{cfg, {}};
  if (cfg.format == "json")
    e.buf << coadj::json{{"orbit_dimension", dim}, {"weyl_index", dim / 2}}.dump() << "\n";
  else
    e.buf << dim << "\n";
  e.flush();
  return kOk;
}

int cmd_decompose(const CliConfig& cfg, const std::string& file) {
  const auto f = coadj::functional_from_json(read_json_file(file));
  const auto res = coadj::decompose(f);
  Emitter e{cfg, {}};
  if (cfg.format == "json") {
    e.buf << coadj::basic_to_json(f.system().rank(), res.subset, res.map).dump() << "\n";
  } else {
    for (const auto& [r, v] : res.map) e.buf << coadj::to_string(r) << "\t" << coadj::to_string(v) << "\n";
  }
  e.flush();
  return kOk;
}

int cmd_dims(const CliConfig& cfg, bool weyl) {
  const auto dims = coadj::achievable_dimensions(cfg.n);
  const auto ms = coadj::weyl_indices(cfg.n);
  Emitter e{cfg, {}};
  if (cfg.format == "json") {
    e.buf << coadj::json{{"n", cfg.n}, {"dimensions", dims}, {"weyl_indices", ms}, {"max_weyl_index", coadj::max_weyl_index(cfg.n)}}
                 .dump()
          << "\n";
  } else if (weyl) {
    for (std::size_t k = 0; k < dims.size(); ++k) e.buf << "dim " << dims[k] << "\tm " << ms[k] << "\n";
  } else {
    e.buf << join(dims) << "\n";
  }
  e.flush();
  return kOk;
}

int cmd_scan(const CliConfig& cfg) {
  Emitter e{cfg, {}};
  coadj::for_each_basic_subset(cfg.n, [&](const coadj::RootSet& d) {
    auto rec = coadj::basic_to_json(cfg.n, d);
    coadj::json derived = coadj::json::array();
    for (const auto& r : coadj::derived_set(d)) derived.push_back(coadj::to_string(r));
    rec["s"] = coadj::s_of(d);
    rec["derived"] = derived;
    rec["single_orbit"] = derived.empty();
    e.buf << rec.dump() << "\n";
  });
  e.flush();
  return kOk;
}

int cmd_verify(const CliConfig& cfg, const std::string& suite, const coadj::SuiteConfig& sc) {
  std::vector<std::string> names;
  if (suite == "all")
    names = coadj::suite_names();
  else
    names = {suite};
  Emitter e{cfg, {}};
  bool ok = true;
  coadj::json reports = coadj::json::array();
  for (const auto& name : names) {
    const auto rep = coadj::run_suite(name, sc);
    ok = ok && rep.pass();
    if (cfg.format == "json")
      reports.push_back(rep.to_json());
    else
      e.buf << name << ": " << (rep.pass() ? "pass" : "FAIL") << " (" << rep.trials << " trials, "
            << rep.failures.size() << " failures)\n";
    if (cfg.format != "json")
      for (const auto& f : rep.failures) e.buf << "  " << f.dump() << "\n";
  }
  if (cfg.format == "json") e.buf << (names.size() == 1 ? reports[0] : reports).dump(2) << "\n";
  e.flush();
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coadjoint orbits of the nilpotent Lie algebras A_{n-1}+, B_n+, D_n+"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto* roots = app.add_subcommand("roots", "list the positive roots in canonical order");
  add_system(roots, cfg);
  add_format(roots, cfg, {"text", "json", "latex"});

  std::string alpha, c = "1";
  auto* chart = app.add_subcommand("chart", "defining equations of the elementary orbit O_alpha(c)");
  add_system(chart, cfg);
  chart->add_option("--alpha", alpha, "root, e.g. e1-e4, e2, e1+e3")->required();
  chart->add_option("--c", c, "nonzero rational p/q");
  add_format(chart, cfg, {"text", "json", "latex"});

  std::string file;
  auto* dim = app.add_subcommand("dim", "coadjoint orbit dimension of a functional");
  dim->add_option("file", file, "functional JSON")->required()->check(CLI::ExistingFile);
  add_format(dim, cfg, {"text", "json"});

  auto* dec = app.add_subcommand("decompose", "basic subset and map of a type-A functional");
  dec->add_option("file", file, "functional JSON")->required()->check(CLI::ExistingFile);
  add_format(dec, cfg, {"text", "json"});

  auto* dims = app.add_subcommand("dims", "achievable orbit dimensions of A_{n-1}+");
  dims->add_option("--n", cfg.n, "rank parameter n")->required();
  add_format(dims, cfg, {"text", "json"});

  auto* weyl = app.add_subcommand("weyl", "Weyl algebra index m for each achievable dimension 2m");
  weyl->add_option("--n", cfg.n, "rank parameter n")->required();
  add_format(weyl, cfg, {"text", "json"});

  auto* scan = app.add_subcommand("scan", "every basic subset of A_{n-1}+ as JSON lines");
  scan->add_option("--n", cfg.n, "rank parameter n")->required();
  scan->add_option("--out", cfg.out, "write output to this file");

  std::string suite = "all";
  std::string v_kind, v_alpha;
  int v_n = 0, v_max_n = 0, v_trials = 0;
  auto* verify = app.add_subcommand("verify", "run oracle suites; exit 2 on any failure");
  verify->add_option("--suite", suite, "suite name or all");
  verify->add_option("--kind", v_kind, "restrict to one type")->check(CLI::IsMember({"A", "B", "D"}));
  verify->add_option("--n", v_n, "single rank");
  verify->add_option("--max-n", v_max_n, "largest rank");
  verify->add_option("--alpha", v_alpha, "restrict to one root");
  verify->add_option("--trials", v_trials, "trials per unit");
  verify->add_option("--seed", cfg.seed, "random seed");
  add_format(verify, cfg, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*roots) return cmd_roots(cfg);
    if (*chart) return cmd_chart(cfg, alpha, c);
    if (*dim) return cmd_dim(cfg, file);
    if (*dec) return cmd_decompose(cfg, file);
    if (*dims) return cmd_dims(cfg, false);
    if (*weyl) return cmd_dims(cfg, true);
    if (*scan) return cmd_scan(cfg);
    if (*verify) {
      coadj::SuiteConfig sc;
      sc.seed = cfg.seed;
      if (!v_kind.empty()) sc.kind = coadj::parse_kind(v_kind);
      if (v_n > 0) sc.n = v_n;
      if (v_max_n > 0) sc.max_n = v_max_n;
      if (v_trials > 0) sc.trials = v_trials;
      if (!v_alpha.empty()) sc.alpha = coadj::parse_root(v_alpha);
      return cmd_verify(cfg, suite, sc);
    }
  } catch (const coadj::DecompositionUnverified& e) {
    std::cerr << "error: decomposition-unverified: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const std::logic_error& e) {
    // invalid_argument, out_of_range and the library's own logic errors.
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const coadj::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
