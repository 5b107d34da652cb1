#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace coadj;

namespace {

const RootKind kKinds[] = {RootKind::A, RootKind::B, RootKind::D};

std::set<std::string> as_names(const std::vector<Root>& roots) {
  std::set<std::string> out;
  for (const Root& r : roots) out.insert(to_string(r));
  return out;
}

bool has_line(const std::vector<std::string>& lines, const std::string& want) {
  return std::find(lines.begin(), lines.end(), want) != lines.end();
}

std::map<Root, Rational> random_assignment(const SingularData& d, Sampler& rng) {
  std::map<Root, Rational> a;
  for (const Root& r : d.singular) a[r] = rng.index(4) == 0 ? Rational(0) : rng.nonzero_rational();
  return a;
}

}  // namespace

TEST(SingularSet, TypeAExample) {
  const auto sys = positive_roots(RootKind::A, 4);
  const auto d = singular_set(sys, Root::diff(1, 4));
  EXPECT_EQ(as_names(d.singular), (std::set<std::string>{"e1-e2", "e2-e4", "e1-e3", "e3-e4"}));
  EXPECT_EQ(as_names(d.regular), (std::set<std::string>{"e1-e4", "e2-e3"}));
}

TEST(SingularSet, TypeBExamples) {
  const auto sys = positive_roots(RootKind::B, 3);
  EXPECT_EQ(as_names(singular_set(sys, Root::diff(1, 3)).singular), (std::set<std::string>{"e1-e2", "e2-e3"}));
  EXPECT_EQ(as_names(singular_set(sys, Root::shortr(1)).singular),
            (std::set<std::string>{"e1-e2", "e2", "e1-e3", "e3"}));
  EXPECT_EQ(as_names(singular_set(sys, Root::shortr(1)).regular),
            (std::set<std::string>{"e1", "e2-e3", "e2+e3", "e1+e3", "e1+e2"}));
  EXPECT_EQ(as_names(singular_set(sys, Root::sum(1, 3)).singular),
            (std::set<std::string>{"e1-e2", "e2+e3", "e1", "e3"}));
  EXPECT_EQ(as_names(singular_set(sys, Root::sum(1, 3)).regular),
            (std::set<std::string>{"e1+e3", "e1-e3", "e2-e3", "e2", "e1+e2"}));
}

TEST(SingularSet, TypeDExamples) {
  const auto sys = positive_roots(RootKind::D, 3);
  EXPECT_EQ(as_names(singular_set(sys, Root::diff(1, 3)).regular),
            (std::set<std::string>{"e1-e3", "e1+e3", "e2+e3", "e1+e2"}));
  EXPECT_EQ(as_names(singular_set(sys, Root::sum(1, 3)).singular), (std::set<std::string>{"e1-e2", "e2+e3"}));
  EXPECT_EQ(as_names(singular_set(sys, Root::sum(1, 3)).regular),
            (std::set<std::string>{"e1+e3", "e1-e3", "e2-e3", "e1+e2"}));
}

TEST(SingularSet, CardinalityFormulas) {
  for (int n = 2; n <= 8; ++n)
    for (RootKind k : kKinds) {
      const auto sys = positive_roots(k, n);
      for (const Root& a : sys.roots()) {
        const auto d = singular_set(sys, a);
        std::size_t want = 0;
        if (a.is_diff()) want = 2 * static_cast<std::size_t>(a.j - a.i - 1);
        if (a.is_short()) want = 2 * static_cast<std::size_t>(n - a.i);
        if (a.is_sum())
          want = k == RootKind::B ? 2 * static_cast<std::size_t>(2 * n - a.i - a.j)
                                  : 2 * static_cast<std::size_t>(2 * n - a.i - a.j - 1);
        EXPECT_EQ(d.singular.size(), want) << sys.name() << " " << to_string(a);
        EXPECT_EQ(singular_count(k, n, a), want);
        EXPECT_EQ(d.singular.size() + d.regular.size(), sys.size());
        EXPECT_EQ(d.pairs.size() * 2, d.singular.size());
      }
    }
}

// Each pair brackets to a nonzero multiple of alpha.
TEST(SingularSet, PairsBracketToAlpha) {
  for (RootKind k : kKinds)
    for (int n = 2; n <= 6; ++n) {
      const auto sys = positive_roots(k, n);
      for (const Root& a : sys.roots())
        for (const auto& p : singular_set(sys, a).pairs) {
          const auto v = bracket(sys, p.left, p.right);
          ASSERT_TRUE(v);
          EXPECT_EQ(v->result, a);
          EXPECT_EQ(v->coef, p.sign);
        }
    }
}

TEST(ElementaryOrbit, DimensionEqualsSingularCount) {
  for (RootKind k : kKinds)
    for (int n = 2; n <= 5; ++n) {
      const auto sys = positive_roots(k, n);
      for (const Root& a : sys.roots())
        for (const Rational& c : {Rational(1), Rational(2), Rational(-3, 5)})
          EXPECT_EQ(orbit_dimension(Functional::dual_basis(sys, a, c)), singular_count(k, n, a));
    }
}

TEST(Chart, TypeAExampleText) {
  const auto chart = orbit_chart(positive_roots(RootKind::A, 4), Root::diff(1, 4));
  const auto lines = render_chart_text(chart);
  EXPECT_EQ(lines.front(), "f(e1-e4) = 1");
  EXPECT_TRUE(has_line(lines, "f(e2-e3) = f(e1-e3)*f(e2-e4)"));
  EXPECT_EQ(lines.size(), 2u);
}

TEST(Chart, SimpleRootIsAPoint) {
  const auto chart = orbit_chart(positive_roots(RootKind::A, 3), Root::diff(1, 2));
  EXPECT_EQ(render_chart_text(chart),
            (std::vector<std::string>{"f(e1-e2) = 1", "f(e2-e3) = 0", "f(e1-e3) = 0"}));
}

TEST(Chart, TypeBExamples) {
  const auto sys = positive_roots(RootKind::B, 3);
  auto lines = render_chart_text(orbit_chart(sys, Root::shortr(1)));
  EXPECT_TRUE(has_line(lines, "f(e1) = 1"));
  EXPECT_TRUE(has_line(lines, "f(e2-e3) = f(e1-e3)*f(e2)"));
  EXPECT_TRUE(has_line(lines, "f(e1+e2) = 0"));

  lines = render_chart_text(orbit_chart(sys, Root::sum(1, 3)));
  EXPECT_TRUE(has_line(lines, "f(e1-e3) = -(1/2)*f(e1)^2"));
  EXPECT_TRUE(has_line(lines, "f(e2) = f(e1)*f(e2+e3)"));
  EXPECT_TRUE(has_line(lines, "f(e1+e2) = 0"));
  EXPECT_TRUE(has_line(lines, "f(e2-e3) = -(1/2)*f(e1)^2*f(e2+e3)"));

  for (const auto& l : render_chart_text(orbit_chart(sys, Root::diff(1, 3))))
    if (l.rfind("f(e1-e3)", 0) != 0) EXPECT_EQ(l.substr(l.size() - 4), " = 0") << l;
}

TEST(Chart, TypeDExample) {
  const auto sys = positive_roots(RootKind::D, 3);
  const auto lines = render_chart_text(orbit_chart(sys, Root::sum(1, 3)));
  EXPECT_EQ(lines.front(), "f(e1+e3) = 1");
  EXPECT_TRUE(has_line(lines, "f(e1-e3) = 0"));
  EXPECT_TRUE(has_line(lines, "f(e1+e2) = 0"));
  EXPECT_TRUE(has_line(lines, "f(e2-e3) = 0"));
}

TEST(Chart, ScaledRendering) {
  const auto chart = orbit_chart(positive_roots(RootKind::B, 3), Root::sum(1, 3), Rational(2));
  const auto lines = render_chart_text(chart);
  EXPECT_EQ(lines.front(), "f(e1+e3) = 2");
  EXPECT_TRUE(has_line(lines, "f(e1-e3) = -(1/4)*f(e1)^2"));
}

TEST(Chart, LatexRendering) {
  const auto lines = render_chart_latex(orbit_chart(positive_roots(RootKind::B, 3), Root::sum(1, 3)));
  EXPECT_TRUE(has_line(lines, "f(e_{\\epsilon_{1}-\\epsilon_{3}}) = -\\frac{1}{2}f(e_{\\epsilon_{1}})^{2}"));
}

TEST(Chart, SoundOnRandomOrbitPoints) {
  std::uint64_t seed = 1;
  for (RootKind k : kKinds)
    for (int n = 2; n <= 4; ++n) {
      const auto sys = positive_roots(k, n);
      for (const Root& a : sys.roots())
        for (const Rational& c : {Rational(1), Rational(-3, 5)}) {
          const auto chart = orbit_chart(sys, a, c);
          for (int t = 0; t < 10; ++t) {
            auto [f, w] = random_orbit_point(sys, a, c, seed++);
            ASSERT_TRUE(contains(chart, f)) << sys.name() << " " << to_string(a) << " c=" << c;
          }
        }
    }
}

TEST(Chart, RejectsPerturbedPoints) {
  const auto sys = positive_roots(RootKind::B, 3);
  const auto chart = orbit_chart(sys, Root::sum(1, 3));
  auto [f, w] = random_orbit_point(sys, Root::sum(1, 3), 1, 5);
  EXPECT_TRUE(contains(chart, f));
  EXPECT_FALSE(contains(chart, f.with(Root::diff(1, 3), f(Root::diff(1, 3)) + 1)));
  EXPECT_THROW(construct_group_word(chart, f.with(Root::sum(1, 2), 1)), NotInOrbit);
}

TEST(Chart, RoundTripThroughGroupWord) {
  Sampler rng(99);
  for (RootKind k : kKinds)
    for (int n = 2; n <= 4; ++n) {
      const auto sys = positive_roots(k, n);
      for (const Root& a : sys.roots()) {
        const Rational c = rng.nonzero_rational();
        const auto chart = orbit_chart(sys, a, c);
        for (int t = 0; t < 5; ++t) {
          const auto f = chart_point(chart, random_assignment(chart.data(), rng));
          EXPECT_TRUE(contains(chart, f));
          const auto w = construct_group_word(chart, f);
          EXPECT_EQ(coadjoint_apply(w, Functional::dual_basis(sys, a, c)), f) << sys.name() << " " << to_string(a);
        }
      }
    }
}

TEST(Chart, ErrorCases) {
  const auto sys = positive_roots(RootKind::D, 4);
  EXPECT_THROW(orbit_chart(sys, Root::sum(1, 2), 0), ZeroScalar);
  EXPECT_THROW(orbit_chart(sys, Root::shortr(1)), InvalidRoot);
  const auto chart = orbit_chart(sys, Root::sum(1, 2));
  EXPECT_THROW(chart_point(chart, {}), AssignmentError);
  std::map<Root, Rational> a;
  for (const Root& r : chart.data().singular) a[r] = 1;
  a[Root::sum(1, 2)] = 1;
  EXPECT_THROW(chart_point(chart, a), AssignmentError);
}

TEST(SignRule, CertifiedRuleIsUniqueFromRankFour) {
  const auto conv = resolve_sign_conventions(4, kDefaultSeed, 10);
  EXPECT_EQ(conv.rules.at(RootKind::B), kCertifiedSignRule);
  EXPECT_EQ(conv.rules.at(RootKind::D), kCertifiedSignRule);
  // A disjoint seed range gives the same verdict.
  EXPECT_EQ(resolve_sign_conventions(4, kDefaultSeed + 1000003, 10), conv);
}

TEST(SignRule, RankThreeCannotSeparateCandidates) {
  EXPECT_THROW(resolve_sign_conventions(3, kDefaultSeed, 20), AmbiguousConvention);
  EXPECT_THROW(resolve_sign_conventions(2), RankError);
}

TEST(SignRule, PrintedRulesFailAtRankFour) {
  for (RootKind k : {RootKind::B, RootKind::D}) {
    const auto sys = positive_roots(k, 4);
    for (SignRule rule : {SignRule::AlternatingK, SignRule::AlternatingKMinusJ, SignRule::NegAlternatingK}) {
      bool failed = false;
      for (const Root& a : sys.roots()) {
        if (!a.is_sum()) continue;
        const auto chart = orbit_chart(sys, a, 1, rule);
        for (std::uint64_t s = 0; s < 5 && !failed; ++s)
          failed = !contains(chart, random_orbit_point(sys, a, 1, s).first);
      }
      EXPECT_TRUE(failed) << kind_letter(k) << " " << to_string(rule);
    }
  }
}

TEST(SignRule, TypeDRankThreeValueIsZero) {
  const auto sys = positive_roots(RootKind::D, 3);
  for (std::uint64_t s = 0; s < 50; ++s)
    EXPECT_EQ(random_orbit_point(sys, Root::sum(1, 3), 1, s).first(Root::diff(1, 3)), 0);
}
