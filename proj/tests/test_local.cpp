#include <rbif/elimination.hpp>
#include <rbif/error.hpp>
#include <rbif/local.hpp>
#include <rbif/parser.hpp>

#include <gtest/gtest.h>

#include <cmath>

#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace rbif;

namespace {

MultiPoly P(const char* s) { return parse_internal(s); }

const AlgebraicPoint kOrigin = AlgebraicPoint::rational(0, 0);

int class_total(const std::vector<AlgebraicPoint>& pts) {
  int n = 0;
  for (const auto& p : pts) n += p.count();
  return n;
}

/// Every conjugate point satisfies both equations, checked numerically.
void expect_on_both(const std::vector<AlgebraicPoint>& pts, const MultiPoly& p, const MultiPoly& q) {
  for (const auto& pt : pts) {
    EXPECT_TRUE(translate_to_origin(p, pt).coeff(Var::x, 0).coeff(Var::y, 0).is_zero());
    EXPECT_TRUE(translate_to_origin(q, pt).coeff(Var::x, 0).coeff(Var::y, 0).is_zero());
  }
}

}  // namespace

TEST(SolveSystem, CubicPencilIndeterminacy) {
  MultiPoly p = P("x^3 + 1"), q = P("x y + 1");
  auto pts = solve_system(p, q);
  EXPECT_EQ(class_total(pts), 3);
  expect_on_both(pts, p, q);
  for (const auto& pt : pts)
    for (const auto& c : pt.approximate()) {
      EXPECT_NEAR(std::abs(c[0] * c[0] * c[0] + 1.0), 0, 1e-9);
      EXPECT_NEAR(std::abs(c[0] * c[1] + 1.0), 0, 1e-9);
    }
}

TEST(SolveSystem, Lines) {
  auto pts = solve_system(P("x"), P("y"));
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0].count(), 1);
  EXPECT_TRUE(pts[0].x.is_zero());
  EXPECT_TRUE(pts[0].y.is_zero());
}

TEST(SolveSystem, BilinearPencilIndeterminacy) {
  MultiPoly p = P("x y + 1"), q = P("x^2 + 1");
  auto pts = solve_system(p, q);
  EXPECT_EQ(class_total(pts), 2);
  expect_on_both(pts, p, q);
  for (const auto& pt : pts)
    for (const auto& c : pt.approximate()) {
      EXPECT_NEAR(std::abs(c[0] - c[1]), 0, 1e-12);
      EXPECT_NEAR(std::abs(c[0] * c[0] + 1.0), 0, 1e-12);
    }
}

TEST(SolveSystem, NeedsShear) {
  // Two points on the line y = 0: the unsheared projection collides.
  MultiPoly p = P("y"), q = P("x^2 - 1");
  auto pts = solve_system(p, q);
  EXPECT_EQ(class_total(pts), 2);
  expect_on_both(pts, p, q);
}

TEST(SolveSystem, Errors) {
  EXPECT_THROW(solve_system(P("x(y+1)"), P("x(y-1)")), MathError);
  try {
    solve_system(P("x"), P("x"));
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PositiveDimensional);
  }
  EXPECT_TRUE(solve_system(P("y"), P("y - 1")).empty());
  EXPECT_TRUE(solve_system(P("3"), P("x")).empty());
}

TEST(SolveSystem, Enclosures) {
  auto pts = solve_system(P("x^2 + 1"), P("y - x"));
  ASSERT_EQ(class_total(pts), 2);
  for (const auto& pt : pts)
    for (const auto& b : pt.enclosures(Rational(1, 1000000))) {
      EXPECT_TRUE(b[0].contains(ComplexRational(0, 1)) || b[0].contains(ComplexRational(0, -1)));
      EXPECT_LT(b[0].radius, Rational(1, 1000));
    }
}

TEST(Intersection, Basic) {
  EXPECT_EQ(intersection_multiplicity(P("x"), P("y"), kOrigin), 1);
  EXPECT_EQ(intersection_multiplicity(P("y"), P("y - x^2"), kOrigin), 2);
  EXPECT_EQ(intersection_multiplicity(P("-3x^2"), P("2y"), kOrigin), oracle::staircase({{2, 0}, {0, 1}}));
  EXPECT_EQ(intersection_multiplicity(P("x + 1"), P("y"), kOrigin), 0);
}

TEST(Intersection, NonIsolated) {
  try {
    intersection_multiplicity(P("x y"), P("x (y - 1)"), kOrigin);
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonIsolated);
  }
  EXPECT_THROW(intersection_multiplicity(P("y"), P("y^2"), kOrigin), MathError);
}

TEST(Milnor, Examples) {
  EXPECT_EQ(milnor_number(P("y^2 - x^3"), kOrigin), 2);
  EXPECT_EQ(milnor_number(P("x^2 + y^2"), kOrigin), 1);
  EXPECT_EQ(milnor_number(P("x^2 + y^2"), AlgebraicPoint::rational(1, 0)), 0);
  // x^3 + z^3 at the origin of the chart, with z in the second slot.
  EXPECT_EQ(milnor_number(P("x^3 + y^3"), kOrigin), 4);
  try {
    milnor_number(P("y^2"), kOrigin);
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonIsolatedSingularity);
  }
}

TEST(Milnor, ParametricCubicPencil) {
  MultiPoly f = P("x^3 + 1"), g = P("x y + 1");
  for (const auto& pt : solve_system(f, g))
    for (const auto& rec : milnor_parametric(f, g, pt)) {
      EXPECT_EQ(rec.mu_generic, 0);
      EXPECT_TRUE(rec.candidates.empty());
      EXPECT_TRUE(rec.jump_values().empty());
      EXPECT_EQ(rec.max_at(AlgebraicNumber::from_rational(0)), 0);
    }
}

TEST(Milnor, ParametricSquareCompletion) {
  // f - t g = y^2 - t y - x^2 has gradient (0, -t) at the origin: regular
  // for t != 0 and a Morse point at t = 0.
  MultiPoly f = P("y^2 - x^2"), g = P("y");
  auto recs = milnor_parametric(f, g, kOrigin);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].mu_generic, milnor_number(f - g, kOrigin));
  EXPECT_EQ(recs[0].mu_generic, 0);
  auto jumps = recs[0].jump_values();
  ASSERT_EQ(jumps.size(), 1u);
  EXPECT_TRUE(equal(jumps[0], AlgebraicNumber::from_rational(0)));
  EXPECT_EQ(recs[0].max_at(jumps[0]), milnor_number(f, kOrigin));
}

TEST(Milnor, ParametricConstantMorse) {
  // f - t g = x^2 + y^2 - t x^3 stays Morse at the origin.
  auto recs = milnor_parametric(P("x^2 + y^2"), P("x^3"), kOrigin);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].mu_generic, 1);
  EXPECT_TRUE(recs[0].jump_values().empty());
}

TEST(Milnor, ParametricJump) {
  // f - t g = y^2 - x^3 - t x^2: Morse for t != 0, a cusp at t = 0.
  auto recs = milnor_parametric(P("y^2 - x^3"), P("x^2"), kOrigin);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].mu_generic, 1);
  auto jumps = recs[0].jump_values();
  ASSERT_EQ(jumps.size(), 1u);
  EXPECT_TRUE(equal(jumps[0], AlgebraicNumber::from_rational(0)));
  EXPECT_EQ(recs[0].max_at(AlgebraicNumber::from_rational(0)), 2);
  EXPECT_EQ(recs[0].sum_at(AlgebraicNumber::from_rational(0)), 2);
  EXPECT_EQ(recs[0].sum_at(AlgebraicNumber::from_rational(5)), 1);
}

TEST(Milnor, ParametricJumpOverConjugates) {
  // At the conjugate points (+-i, 0) of A(F) the pencil jumps at t = 0;
  // the class sum is checked against a direct count at that value.
  MultiPoly f = P("(x^2+1)^2 + y^2"), g = P("x^2 + 1");
  auto pts = solve_system(f, g);
  int jumps = 0;
  for (const auto& pt : pts)
    for (const auto& rec : milnor_parametric(f, g, pt)) {
      for (const auto& t0 : rec.jump_values()) {
        ++jumps;
        ASSERT_TRUE(t0.is_rational());
        MultiPoly h = f - g.scale(t0.rational_value());
        int direct = 0;
        for (const auto& b : intersection_multiplicities(h.derivative(Var::x), h.derivative(Var::y), rec.point))
          direct += b.value * b.modulus.degree();
        EXPECT_EQ(rec.sum_at(t0), direct);
      }
    }
  EXPECT_GE(jumps, 1);
}

TEST(Milnor, NormInT) {
  // N(t - u) over Q[u]/(u^2 + 1) is t^2 + 1.
  EXPECT_EQ(norm_in_t(P("t - u"), UPoly{1, 0, 1}), (UPoly{1, 0, 1}));
}

TEST(LocalProperty, BezoutSum) {
  gen::Gen g(41);
  int checked = 0;
  for (int i = 0; i < 2000 && checked < 220; ++i) {
    MultiPoly p = g.nonzero_poly({Var::x, Var::y}, g.integer(1, 3), 4, 3);
    MultiPoly q = g.nonzero_poly({Var::x, Var::y}, g.integer(1, 3), 4, 3);
    if (p.degree() < 1 || q.degree() < 1) continue;
    // No intersection at infinity: the leading forms have no common zero.
    MultiPoly lp = p.leading_form().substitute({{Var::y, MultiPoly(1)}});
    MultiPoly lq = q.leading_form().substitute({{Var::y, MultiPoly(1)}});
    if (lp.degree(Var::x) != p.degree() && lq.degree(Var::x) != q.degree()) continue;
    if (resultant(lp, lq, Var::x).is_zero()) continue;
    if (!gcd(p, q).is_constant()) continue;
    int total = 0;
    for (const auto& pt : solve_system(p, q)) total += total_intersection_multiplicity(p, q, pt);
    ASSERT_EQ(total, p.degree() * q.degree()) << p.to_string() << " | " << q.to_string();
    ++checked;
  }
  EXPECT_GE(checked, 200);
}

TEST(LocalProperty, Symmetry) {
  gen::Gen g(42);
  for (int i = 0; i < 220; ++i) {
    MultiPoly p = g.nonzero_poly({Var::x, Var::y}, 3, 4, 3) * P("x") + g.poly({Var::x, Var::y}, 2, 2, 3) * P("y");
    MultiPoly q = g.nonzero_poly({Var::x, Var::y}, 3, 4, 3) * P("y") + g.poly({Var::x, Var::y}, 2, 2, 3) * P("x^2");
    if (p.is_zero() || q.is_zero() || !gcd(p, q).is_constant()) continue;
    ASSERT_EQ(intersection_multiplicity(p, q, kOrigin), intersection_multiplicity(q, p, kOrigin));
  }
}

TEST(LocalProperty, BrieskornAgainstStaircase) {
  for (int a = 2; a <= 16; ++a)
    for (int b = 2; b <= 16; ++b) {
      MultiPoly h = MultiPoly::var(Var::x, a) + MultiPoly::var(Var::y, b);
      ASSERT_EQ(milnor_number(h, kOrigin), oracle::staircase({{a - 1, 0}, {0, b - 1}}));
      ASSERT_EQ(milnor_number(h, kOrigin), (a - 1) * (b - 1));
    }
}

TEST(LocalProperty, TranslationInvariance) {
  gen::Gen g(43);
  for (int i = 0; i < 220; ++i) {
    int a = g.integer(2, 5), b = g.integer(2, 5);
    MultiPoly h = MultiPoly::var(Var::x, a) + MultiPoly::var(Var::y, b) + g.poly({Var::x, Var::y}, 6, 2, 3) * P("x^2 y^2");
    Rational x0 = g.rational(3, 2), y0 = g.rational(3, 2);
    MultiPoly moved = h.substitute({{Var::x, P("x") - MultiPoly(x0)}, {Var::y, P("y") - MultiPoly(y0)}});
    ASSERT_EQ(milnor_number(moved, AlgebraicPoint::rational(x0, y0)), milnor_number(h, kOrigin));
  }
}

TEST(LocalProperty, Semicontinuity) {
  gen::Gen g(44);
  int records = 0;
  for (int i = 0; i < 220; ++i) {
    // Pencils singular at the origin with t-dependent Hessian.
    MultiPoly f = g.nonzero_poly({Var::x, Var::y}, 3, 3, 3) * P("x^2") + g.poly({Var::x, Var::y}, 3, 3, 3) * P("y^2") +
                  MultiPoly(g.rational(3, 1)) * P("x y");
    MultiPoly gg = g.nonzero_poly({Var::x, Var::y}, 2, 3, 3) * P("x^2") + MultiPoly(g.rational(3, 1)) * P("y^2") + P("x y");
    if (!gcd(f, gg).is_constant()) continue;
    std::vector<MilnorRecord> recs;
    try {
      recs = milnor_parametric(f, gg, kOrigin);
    } catch (const MathError& e) {
      ASSERT_TRUE(e.kind() == ErrorKind::NonIsolated) << e.what();
      continue;
    }
    for (const auto& rec : recs) {
      ++records;
      for (const auto& [t0, mu] : rec.mu_at) ASSERT_GE(mu, rec.mu_generic);
      for (const auto& s : rec.specializations) ASSERT_GE(s.mu, rec.mu_generic);
      // Off the candidates the generic value holds, checked at a rational point.
      Rational t1 = g.rational(9, 7);
      if (rec.candidate_poly.eval(t1) != 0) {
        MultiPoly h = f - gg.scale(t1);
        try {
          ASSERT_EQ(milnor_number(h, kOrigin), rec.mu_generic);
        } catch (const MathError& e) {
          FAIL() << e.what();
        }
      }
    }
  }
  EXPECT_GE(records, 200);
}
