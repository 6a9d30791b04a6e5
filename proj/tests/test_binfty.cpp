#include <rbif/binfty.hpp>
#include <rbif/elimination.hpp>
#include <rbif/error.hpp>
#include <rbif/parser.hpp>

#include <gtest/gtest.h>

#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace rbif;

namespace {

MultiPoly P(const char* s) { return parse_internal(s); }

AlgebraicNumber Q(long n) { return AlgebraicNumber::from_rational(Rational(n)); }

bool same_set(const std::vector<AlgebraicNumber>& a, const std::vector<AlgebraicNumber>& b) {
  for (const auto& x : a)
    if (!member(x, b)) return false;
  for (const auto& x : b)
    if (!member(x, a)) return false;
  return true;
}

/// Classical discriminant from the Sylvester determinant.
MultiPoly oracle_discriminant(const MultiPoly& p, Var v) {
  const int n = p.degree(v);
  MultiPoly r = oracle::sylvester_resultant(p, p.derivative(v), v);
  MultiPoly d = divide_exact(r, p.leading_coeff(v));
  return (n * (n - 1) / 2) % 2 == 1 ? -d : d;
}

MultiPoly affine(const MultiPoly& p, const Rational& a, const Rational& b, const Rational& c, const Rational& e) {
  const MultiPoly x = MultiPoly::var(Var::x), y = MultiPoly::var(Var::y);
  return p.substitute({{Var::x, x + y.scale(a) + MultiPoly(c)}, {Var::y, y + x.scale(b) + MultiPoly(e)}});
}

}  // namespace

TEST(DegreeCondition, FDominates) {
  auto r = check_degree_condition(P("x^3 + 1"), P("x y + 1"));
  EXPECT_EQ(r.degree_case, DegreeCase::FDominates);
  EXPECT_EQ(r.d, 3);
  EXPECT_TRUE(r.holds_for_all_t);
  EXPECT_TRUE(r.excluded_values.empty());
}

TEST(DegreeCondition, EqualNonProportional) {
  auto r = check_degree_condition(P("x y + 1"), P("x^2 + 1"));
  EXPECT_EQ(r.degree_case, DegreeCase::Equal);
  EXPECT_EQ(r.d, 2);
  EXPECT_TRUE(r.excluded_values.empty());
}

TEST(DegreeCondition, EqualProportional) {
  auto r = check_degree_condition(P("x^2 + y"), P("x^2 + x"), Q(1));
  EXPECT_FALSE(r.holds_for_all_t);
  ASSERT_EQ(r.excluded_values.size(), 1u);
  EXPECT_TRUE(equal(r.excluded_values[0], Q(1)));
  EXPECT_EQ(r.holds_at_t0, std::optional<bool>(false));
  EXPECT_EQ(check_degree_condition(P("x^2 + y"), P("x^2 + x"), Q(2)).holds_at_t0, std::optional<bool>(true));
}

TEST(DegreeCondition, GDominates) {
  auto r = check_degree_condition(P("x"), P("x^2 + y"));
  EXPECT_EQ(r.degree_case, DegreeCase::GDominates);
  ASSERT_EQ(r.excluded_values.size(), 1u);
  EXPECT_TRUE(r.excluded_values[0].is_zero());
}

TEST(Normalize, CubicPencilNeedsNoShear) {
  auto n = normalize_x_degree(P("x^3 + 1"), P("x y + 1"), 3);
  EXPECT_EQ(n.lambda, 0);
  EXPECT_EQ(n.substitution, "identity");
  EXPECT_TRUE(n.bad_values.empty());
}

TEST(Normalize, CubeInY) {
  auto n = normalize_x_degree(P("y^3 + x"), P("1"), 3);
  EXPECT_EQ(n.lambda, 1);
  EXPECT_EQ(n.f, P("(y + x)^3 + x"));
  EXPECT_EQ(n.x_coefficient, UPoly::constant(1));
}

TEST(Normalize, BilinearPencilKeepsOneBadValue) {
  auto n = normalize_x_degree(P("x y + 1"), P("x^2 + 1"), 2);
  EXPECT_EQ(n.lambda, 0);
  EXPECT_EQ(n.x_coefficient, (UPoly{0, -1}));
  ASSERT_EQ(n.bad_values.size(), 1u);
  EXPECT_TRUE(n.bad_values[0].is_zero());
  auto sheared = normalize_x_degree(P("x (y + x) + 1"), P("x^2 + 1"), 2);
  EXPECT_EQ(sheared.x_coefficient, (UPoly{1, -1}));
}

TEST(Infinity, CubicPencil) {
  auto c = critical_values_at_infinity(P("x^3 + 1"), P("x y + 1"));
  EXPECT_EQ(c.delta.poly, P("4t^3 y^3 - 27(1 - t)^2"));
  EXPECT_EQ(c.k, 3);
  EXPECT_EQ(c.q_k, (UPoly{0, 0, 0, 4}));
  ASSERT_EQ(c.roots.size(), 1u);
  EXPECT_TRUE(c.roots[0].is_zero());
  EXPECT_EQ(c.roots[0].multiplicity(), 3);
}

TEST(Infinity, BilinearPencilIsEmpty) {
  auto c = critical_values_at_infinity(P("x y + 1"), P("x^2 + 1"));
  EXPECT_EQ(c.delta.poly, P("y^2 + 4t(1 - t)"));
  EXPECT_EQ(c.q_k, UPoly::constant(1));
  EXPECT_TRUE(c.roots.empty());
  ASSERT_EQ(c.reexamined.size(), 1u);
  EXPECT_TRUE(c.reexamined[0].value.is_zero());
  EXPECT_FALSE(c.reexamined[0].member);
  EXPECT_NE(c.reexamined[0].lambda, 0);
  auto i = AlgebraicNumber(UPoly{1, 0, 1}, ComplexBox{ComplexRational(0, 1), Rational(1, 8)}, 1);
  EXPECT_FALSE(member(i, c.roots));
}

TEST(Infinity, Broughton) {
  MultiPoly pencil = P("x^2 y + x - t");
  EXPECT_EQ(discriminant(pencil, Var::x).poly, P("1 + 4t y"));
  EXPECT_EQ(oracle_discriminant(pencil, Var::x), P("1 + 4t y"));
  auto c = critical_values_at_infinity(P("x + x^2 y"), P("1"));
  EXPECT_EQ(c.normalization.lambda, 1);
  ASSERT_EQ(c.roots.size(), 1u);
  EXPECT_TRUE(c.roots[0].is_zero());
}

TEST(Infinity, TameExamples) {
  EXPECT_TRUE(critical_values_at_infinity(P("x^2 + y^2"), P("1")).roots.empty());
  EXPECT_TRUE(critical_values_at_infinity(P("x"), P("1")).roots.empty());
  EXPECT_TRUE(critical_values_at_infinity(P("x^2 + y^2 - 1"), P("1")).roots.empty());
}

TEST(Infinity, ExcludedValuesAreUndetermined) {
  auto c = critical_values_at_infinity(P("x^2 + y"), P("x^2 + x"));
  ASSERT_EQ(c.undetermined.size(), 1u);
  EXPECT_TRUE(equal(c.undetermined[0], Q(1)));
  EXPECT_FALSE(member(Q(1), c.roots));
}

TEST(Infinity, StrippedContentIsLeadingCoefficient) {
  auto c = critical_values_at_infinity(P("x y + 1"), P("x^3 + y"));
  EXPECT_FALSE(c.q_k.is_zero());
  for (const auto& r : c.roots) EXPECT_FALSE(r.is_zero());
}

TEST(Infinity, RawDiscriminantMatchesSylvester) {
  gen::Gen g(41);
  for (int i = 0; i < 200; ++i) {
    MultiPoly p = g.nonzero_poly({Var::x, Var::y}, 3, 4) - MultiPoly::var(Var::t) * g.nonzero_poly({Var::x, Var::y}, 2, 3);
    if (p.degree(Var::x) < 1) continue;
    EXPECT_EQ(discriminant(p, Var::x).poly, oracle_discriminant(p, Var::x)) << p.to_string();
  }
}

namespace {

/// Random coprime pair with deg f > deg g, small enough for quick runs.
std::pair<MultiPoly, MultiPoly> random_pencil(gen::Gen& g) {
  for (;;) {
    MultiPoly f = g.nonzero_poly({Var::x, Var::y}, 3, 4, 3);
    MultiPoly h = g.coin() ? MultiPoly(1) : g.nonzero_poly({Var::x, Var::y}, 2, 3, 3);
    if (f.degree() < 2 || f.degree() <= h.degree()) continue;
    if (!gcd(f, h).is_constant()) continue;
    return {f, h};
  }
}

}  // namespace

TEST(InfinityProperty, ShearInvariance) {
  gen::Gen g(7);
  int nontrivial = 0;
  for (int i = 0; i < 200; ++i) {
    auto [f, h] = random_pencil(g);
    Rational a = g.rational(2, 2), b = g.rational(2, 2);
    if (a * b == 1) continue;
    Rational c = g.rational(2, 1), e = g.rational(2, 1);
    auto base = critical_values_at_infinity(f, h);
    auto moved = critical_values_at_infinity(affine(f, a, b, c, e), affine(h, a, b, c, e));
    if (!base.roots.empty()) ++nontrivial;
    EXPECT_TRUE(same_set(base.roots, moved.roots)) << f.to_string() << " / " << h.to_string();
  }
  EXPECT_GT(nontrivial, 40);
}

TEST(InfinityProperty, ScalingInvariance) {
  gen::Gen g(8);
  for (int i = 0; i < 200; ++i) {
    auto [f, h] = random_pencil(g);
    Rational s = g.nonzero_rational(4, 3);
    auto base = critical_values_at_infinity(f, h);
    auto scaled = critical_values_at_infinity(f.scale(s), h.scale(s));
    EXPECT_TRUE(same_set(base.roots, scaled.roots)) << f.to_string() << " / " << h.to_string();
  }
}
