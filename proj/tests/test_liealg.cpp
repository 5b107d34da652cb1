#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace coadj;

namespace {

const RootKind kKinds[] = {RootKind::A, RootKind::B, RootKind::D};

}  // namespace

TEST(Rational, ParseForms) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-3/5"), Rational(-3, 5));
  EXPECT_EQ(parse_rational("+4/6"), Rational(2, 3));
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", "1//2"}) EXPECT_THROW(parse_rational(bad), std::invalid_argument);
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
}

TEST(LinearAlgebra, RankAndKernel) {
  RationalMatrix m(3, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
  m(2, 0) = 1; m(2, 1) = 0; m(2, 2) = Rational(1, 2);
  EXPECT_EQ(rank(m), 2u);
  const auto ker = kernel_basis(m);
  ASSERT_EQ(ker.size(), 1u);
  for (std::size_t r = 0; r < 3; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < 3; ++c) s += m(r, c) * ker[0][c];
    EXPECT_EQ(s, 0);
  }
  EXPECT_EQ(rank(RationalMatrix(4, 2)), 0u);
}

TEST(Polynomial, ArithmeticAndEvaluation) {
  const auto x = Polynomial::variable(0), y = Polynomial::variable(1);
  const auto p = x * y * Rational(2) + x * x * Rational(-1, 2) + Polynomial::constant(3);
  EXPECT_EQ(p.degree(), 2u);
  const std::vector<Rational> at = {Rational(2), Rational(-1, 3)};
  EXPECT_EQ(p.evaluate([&](std::size_t v) { return at[v]; }), Rational(2 * 2 * -1, 3) - 2 + 3);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((x + y) * (x - y), x * x - y * y);
}

TEST(Polynomial, Rendering) {
  auto name = [](std::size_t v) { return std::string(1, static_cast<char>('a' + v)); };
  const auto x = Polynomial::variable(0), y = Polynomial::variable(1);
  EXPECT_EQ((x * x * Rational(-1, 2)).render(name, "*"), "-(1/2)*a^2");
  EXPECT_EQ((x * y + Polynomial::constant(1)).render(name, "*"), "a*b + 1");
  EXPECT_EQ((x * Rational(2) - y).render(name, "*"), "2*a - b");
  EXPECT_EQ(Polynomial().render(name, "*"), "0");
}

TEST(Polynomial, HomogenizedScalesByDegree) {
  const auto x = Polynomial::variable(0);
  const auto p = x * x + x + Polynomial::constant(1);
  const auto h = p.homogenized(Rational(2));
  // c * P(a / c) with c = 2.
  const Rational a = 3;
  EXPECT_EQ(h.evaluate([&](std::size_t) { return a; }), 2 * p.evaluate([&](std::size_t) { return a / 2; }));
}

TEST(Functional, DualBasisAndAccess) {
  const auto sys = positive_roots(RootKind::B, 3);
  const auto f = Functional::dual_basis(sys, Root::sum(1, 3), Rational(2));
  EXPECT_EQ(f(Root::sum(1, 3)), 2);
  EXPECT_EQ(f.nonzero().size(), 1u);
  EXPECT_THROW(Functional::dual_basis(sys, Root::sum(1, 4)), InvalidRoot);
  EXPECT_THROW(Functional(sys, std::vector<Rational>(3)), std::invalid_argument);
}

TEST(Coadjoint, EmptyWordIsIdentity) {
  const auto sys = positive_roots(RootKind::D, 4);
  const auto f = Functional::dual_basis(sys, Root::sum(1, 2), 5);
  EXPECT_EQ(coadjoint_apply(GroupWord{}, f), f);
}

// Against f(g^{-1} x g) computed with explicit matrix exponentials.
TEST(Coadjoint, AgreesWithMatrixConjugation) {
  for (RootKind k : kKinds)
    for (int n = 2; n <= 4; ++n) {
      const auto sys = positive_roots(k, n);
      for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Sampler rng(seed + 100 * static_cast<std::uint64_t>(n));
        std::vector<Rational> v(sys.size());
        for (auto& x : v) x = rng.nonzero_rational();
        const Functional f(sys, v);
        const GroupWord w = rng.word(sys, 4);
        EXPECT_EQ(coadjoint_apply(w, f), oracle::act(w, f)) << sys.name() << " seed " << seed;
      }
    }
}

TEST(Coadjoint, GroupLaw) {
  const auto sys = positive_roots(RootKind::B, 3);
  Sampler rng(7);
  std::vector<Rational> v(sys.size());
  for (auto& x : v) x = rng.nonzero_rational();
  const Functional f(sys, v);
  for (const Root& beta : sys.roots()) {
    const Rational s(2, 3), t(-5, 7);
    EXPECT_EQ(coadjoint_apply_one(beta, s, coadjoint_apply_one(beta, t, f)), coadjoint_apply_one(beta, s + t, f));
    EXPECT_EQ(coadjoint_apply_one(beta, -t, coadjoint_apply_one(beta, t, f)), f);
  }
  const GroupWord g = rng.word(sys, 3), h = rng.word(sys, 3);
  GroupWord gh = g;
  for (const auto& l : h.letters) gh.then(l.root, l.t);
  EXPECT_EQ(coadjoint_apply(gh, f), coadjoint_apply(g, coadjoint_apply(h, f)));
}

TEST(SkewForm, AntisymmetricAndMatchesOracle) {
  for (RootKind k : kKinds)
    for (int n = 2; n <= 4; ++n) {
      const auto sys = positive_roots(k, n);
      Sampler rng(static_cast<std::uint64_t>(n) * 31 + static_cast<std::uint64_t>(k));
      std::vector<Rational> v(sys.size());
      for (auto& x : v)
        if (rng.index(2)) x = rng.nonzero_rational();
      const Functional f(sys, v);
      const auto b = skew_form(f);
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) EXPECT_EQ(b(i, j), -b(j, i));
      EXPECT_EQ(orbit_dimension(f), oracle::orbit_dimension(f));
      EXPECT_EQ(orbit_dimension(f) % 2, 0u);
      EXPECT_EQ(radical_basis(f).size() + orbit_dimension(f), sys.size());
    }
}

TEST(SkewForm, ZeroFunctionalHasPointOrbit) {
  const auto sys = positive_roots(RootKind::A, 5);
  EXPECT_EQ(orbit_dimension(Functional(sys)), 0u);
}

TEST(SkewForm, RankInvariantAlongOrbits) {
  for (RootKind k : kKinds) {
    const auto sys = positive_roots(k, 4);
    for (const Root& alpha : sys.roots()) {
      auto [f, w] = random_orbit_point(sys, alpha, Rational(-3, 5), 11);
      EXPECT_EQ(orbit_dimension(f), singular_count(k, 4, alpha)) << to_string(alpha);
    }
  }
}
