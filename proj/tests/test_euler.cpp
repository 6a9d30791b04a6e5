#include <rbif/binfty.hpp>
#include <rbif/critical.hpp>
#include <rbif/elimination.hpp>
#include <rbif/error.hpp>
#include <rbif/euler.hpp>
#include <rbif/parser.hpp>

#include <gtest/gtest.h>

#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace rbif;

namespace {

MultiPoly P(const char* s) { return parse_internal(s); }

AlgebraicNumber Q(long n, long d = 1) { return AlgebraicNumber::from_rational(Rational(n, d)); }

void expect_identities(const ChiTable& t) {
  for (const auto& r : t.rows) {
    EXPECT_EQ(r.chi_projective - t.chi_smooth_projective, r.mu_affine + r.mu_infinity);
    EXPECT_EQ(r.chi_fiber, r.chi_projective - t.v_infinity_count - t.a_count);
    EXPECT_LE(t.generic().chi_fiber, r.chi_fiber);
  }
}

const MultiPoly kEx2f = P("x^3 + 1"), kEx2g = P("x y + 1");
const MultiPoly kBroughton = P("x + x^2 y");

}  // namespace

TEST(Genus, SmoothProjective) {
  EXPECT_EQ(chi_smooth_projective(1), 2);
  EXPECT_EQ(chi_smooth_projective(2), 2);
  EXPECT_EQ(chi_smooth_projective(3), 0);
  for (int d = 1; d < 10; ++d) EXPECT_EQ(chi_smooth_projective(d), 3 * d - d * d);
}

TEST(PointsAtInfinity, CubicPencil) {
  auto pts = points_at_infinity(kEx2f, kEx2g);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0].chart, Var::y);
  EXPECT_EQ(pts[0].to_string(), "[0 : 1 : 0]");
  EXPECT_EQ(pts[0].f_chart - MultiPoly::var(Var::t) * pts[0].g_chart, P("x^3 - t x y + (1 - t) y^3"));
}

TEST(PointsAtInfinity, Broughton) {
  auto pts = points_at_infinity(kBroughton, P("1"));
  int n = 0;
  for (const auto& p : pts) n += p.count();
  EXPECT_EQ(n, 2);
}

TEST(PointsAtInfinity, FermatCurves) {
  for (int d = 2; d <= 5; ++d) {
    MultiPoly f = MultiPoly::var(Var::x, d) + MultiPoly::var(Var::y, d);
    int n = 0;
    for (const auto& p : points_at_infinity(f, P("1"))) n += p.count();
    EXPECT_EQ(n, d);
  }
}

TEST(PointsAtInfinity, RequiresStrictDegree) {
  try {
    points_at_infinity(P("x y + 1"), P("x^2 + 1"));
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RequiresStrictDegree);
  }
}

TEST(ChiFiber, CubicPencil) {
  EulerData data(kEx2f, kEx2g);
  EXPECT_EQ(data.a_count(), 3);
  EXPECT_EQ(data.v_infinity_count(), 1);
  ChiTable t = data.table({Q(0), Q(2)});
  expect_identities(t);
  EXPECT_EQ(t.generic().mu_infinity, 1);
  EXPECT_EQ(t.generic().mu_affine, 0);
  EXPECT_EQ(t.generic().chi_fiber, -3);
  EXPECT_EQ(t.at(Q(0)).mu_infinity, 4);
  EXPECT_EQ(t.at(Q(0)).chi_fiber, 0);
  EXPECT_EQ(t.at(Q(2)).chi_fiber, -3);
}

TEST(ChiFiber, CubicPencilInfinityAgainstOracles) {
  const MultiPoly chart = P("x^3 - t x y + (1 - t) y^3");
  EXPECT_EQ(oracle::kouchnirenko({{3, 0}, {1, 1}, {0, 3}}), 1);
  EXPECT_EQ(oracle::kouchnirenko({{3, 0}, {0, 3}}), 4);
  for (const Rational t : {Rational(5, 3), Rational(-2, 7), Rational(3)})
    EXPECT_EQ(oracle::morse_count(chart.evaluate(Var::t, t)), 1);
  EXPECT_EQ(oracle::morse_count(chart.evaluate(Var::t, 0)), 4);
}

TEST(ChiFiber, Broughton) {
  EulerData data(kBroughton, P("1"));
  ChiTable t = data.table({Q(0)});
  expect_identities(t);
  // Generic fiber is C*, the zero fiber is a line plus a disjoint C*.
  EXPECT_EQ(t.generic().chi_fiber, 0);
  EXPECT_EQ(t.at(Q(0)).chi_fiber, 1);
  EXPECT_EQ(t.generic().mu_infinity, 2);
  EXPECT_EQ(t.at(Q(0)).mu_infinity, 3);
}

TEST(ChiFiber, ConicAndCriticalFiber) {
  EulerData data(P("x^2 + y^2"), P("1"));
  ChiTable t = data.table({Q(0)});
  expect_identities(t);
  EXPECT_EQ(t.generic().chi_fiber, 0);
  // Two lines through the origin.
  EXPECT_EQ(t.at(Q(0)).mu_affine, 1);
  EXPECT_EQ(t.at(Q(0)).chi_fiber, 1);
}

TEST(ChiFiber, MilnorJumpAtIndeterminacy) {
  EulerData data(P("y^2 + x + x^3"), P("x"));
  EXPECT_TRUE(data.k0().empty());
  ASSERT_EQ(data.k1().size(), 1u);
  EXPECT_TRUE(equal(data.k1()[0], Q(1)));
  ChiTable t = data.table({Q(1)});
  EXPECT_EQ(t.generic().chi_fiber, -2);
  EXPECT_EQ(t.at(Q(1)).mu_affine, 2);
  EXPECT_FALSE(t.at(Q(1)).formula_asserted);
}

TEST(ChiJump, CubicPencil) {
  EulerData data(kEx2f, kEx2g);
  auto at0 = chi_jump_test(data, Q(0));
  EXPECT_EQ(at0.verdict, JumpVerdict::InBinfty);
  EXPECT_EQ(at0.chi_t0, 0);
  EXPECT_EQ(at0.chi_generic, -3);
  EXPECT_EQ(chi_jump_test(data, Q(2)).verdict, JumpVerdict::NotInBinfty);
  try {
    chi_jump_test(data, Q(1));
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CriterionInapplicable);
  }
}

TEST(ChiJump, Broughton) {
  EXPECT_EQ(chi_jump_test(kBroughton, P("1"), Q(0)).verdict, JumpVerdict::InBinfty);
  EXPECT_EQ(chi_jump_test(kBroughton, P("1"), Q(1)).verdict, JumpVerdict::NotInBinfty);
}

TEST(ChiJump, RefusesMilnorJumps) {
  try {
    chi_jump_test(P("y^2 + x + x^3"), P("x"), Q(1));
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CriterionInapplicable);
  }
}

namespace {

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

TEST(EulerProperty, CriterionAgreementAndMonotonicity) {
  gen::Gen g(11);
  int cases = 0, jumps = 0;
  while (cases < 200) {
    auto [f, h] = random_pencil(g);
    std::optional<EulerData> data;
    try {
      data.emplace(f, h);
    } catch (const MathError& e) {
      if (e.kind() == ErrorKind::DegenerateCriticalLocus) continue;
      throw;
    }
    ++cases;
    auto inf = critical_values_at_infinity(f, h);
    std::vector<AlgebraicNumber> probes = inf.roots;
    probes.push_back(Q(g.integer(-9, 9), g.integer(1, 4)));
    ChiTable table = data->table({});
    for (const auto& t0 : probes) {
      if (member(t0, data->k0()) || member(t0, data->k1())) continue;
      auto j = chi_jump_test(*data, t0);
      const bool q_root = member(t0, inf.roots);
      EXPECT_EQ(j.verdict == JumpVerdict::InBinfty, q_root) << f.to_string() << " / " << h.to_string() << " at " << t0.to_string();
      EXPECT_LE(j.chi_generic, j.chi_t0);
      if (q_root) ++jumps;
      table.rows.push_back(data->row(t0));
    }
    expect_identities(table);
  }
  EXPECT_GT(jumps, 20);
}

TEST(EulerProperty, GenericInfinityMilnorAgainstMorsification) {
  gen::Gen g(12);
  int cases = 0;
  while (cases < 60) {
    auto [f, h] = random_pencil(g);
    const Rational t = g.nonzero_rational(7, 5);
    try {
      critical_points(f, h);
    } catch (const MathError& e) {
      if (e.kind() == ErrorKind::DegenerateCriticalLocus) continue;
      throw;
    }
    ++cases;
    for (const auto& p : points_at_infinity(f, h)) {
      if (p.count() != 1) continue;
      MultiPoly local = translate_to_origin(p.f_chart - MultiPoly::var(Var::t) * p.g_chart, p.point);
      int generic = 0;
      for (const auto& r : milnor_parametric(p.f_chart, p.g_chart, p.point)) generic = r.max_at(AlgebraicNumber::from_rational(t));
      EXPECT_EQ(oracle::morse_count(local.evaluate(Var::t, t)), generic) << f.to_string() << " / " << h.to_string();
    }
  }
}
