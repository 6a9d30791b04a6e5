#include <rbif/error.hpp>
#include <rbif/multipoly.hpp>
#include <rbif/parser.hpp>

#include <gtest/gtest.h>

#include "support/gen.hpp"

using namespace rbif;

namespace {

MultiPoly P(const char* s) { return parse_internal(s); }

}  // namespace

TEST(MultiPoly, DifferenceOfSquares) { EXPECT_EQ(P("(x+y)*(x-y)"), P("x^2-y^2")); }

TEST(MultiPoly, ZeroAbsorbs) {
  MultiPoly p = P("x^3+2xy-7");
  EXPECT_TRUE((p * MultiPoly()).is_zero());
}

TEST(MultiPoly, BilinearPencil) {
  MultiPoly pencil = P("x y + 1") - P("t") * P("x^2+1");
  EXPECT_EQ(pencil, P("-t x^2 + x y + 1 - t"));
  EXPECT_EQ(pencil.degree(), 3);
  EXPECT_EQ(pencil.to_string(), "-x^2*t+x*y-t+1");
}

TEST(MultiPoly, DegreesAndCoefficients) {
  MultiPoly p = P("x^3 - t x y + 1 - t");
  EXPECT_EQ(p.degree(Var::x), 3);
  EXPECT_EQ(p.degree(Var::y), 1);
  EXPECT_EQ(p.coeff(Var::x, 1), P("-t y"));
  EXPECT_EQ(p.leading_coeff(Var::x), MultiPoly(1));
  EXPECT_EQ(MultiPoly::from_coeffs(p.coeffs(Var::x), Var::x), p);
  EXPECT_EQ(p.leading_form(), P("x^3 - t x y"));
  EXPECT_EQ(p.min_degree(Var::x), 0);
}

TEST(MultiPoly, SubstituteShear) {
  MultiPoly p = P("x^2 + y");
  EXPECT_EQ(p.substitute({{Var::x, P("x+y")}}), P("x^2 + 2x y + y^2 + y"));
  EXPECT_EQ(p.substitute({}), p);
}

TEST(MultiPoly, SubstituteIsSimultaneous) {
  EXPECT_EQ(P("x - 2y").substitute({{Var::x, P("y")}, {Var::y, P("x")}}), P("y - 2x"));
}

TEST(MultiPoly, ChartAtInfinity) {
  MultiPoly G = homogenize(P("x^3 - t x y + 1 - t"), 3);
  EXPECT_EQ(G.substitute({{Var::x, MultiPoly(1)}}), P("1 - t y z + (1-t) z^3"));
}

TEST(MultiPoly, Homogenize) {
  EXPECT_EQ(homogenize(P("x^3 - t x y + 1 - t"), 3), P("x^3 - t x y z + (1-t) z^3"));
  EXPECT_EQ(homogenize(MultiPoly(1), 2), P("z^2"));
  EXPECT_EQ(homogenize(P("x + x^2 y"), 3), P("x z^2 + x^2 y"));
}

TEST(MultiPoly, HomogenizeRejectsSmallDegree) {
  try {
    homogenize(P("x^3"), 2);
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeTooSmall);
  }
}

TEST(MultiPoly, ExactDivision) {
  MultiPoly a = P("(x - y)*(x + t y + 1)");
  EXPECT_EQ(divide_exact(a, P("x - y")), P("x + t y + 1"));
  MultiPoly q;
  EXPECT_FALSE(try_divide(a, P("x + y"), q));
}

TEST(MultiPoly, EvaluateAndReduce) {
  EXPECT_EQ(P("t x + t^2").evaluate(Var::t, 2), P("2x + 4"));
  UPoly m{1, 0, 1};
  EXPECT_EQ(P("u^3 + x u^2").reduce_u(m), P("-u - x"));
}

TEST(MultiPolyProperty, RingAxioms) {
  gen::Gen gen(1);
  for (int i = 0; i < 250; ++i) {
    auto vars = {Var::x, Var::y, Var::t};
    MultiPoly a = gen.poly(vars, 3, 4), b = gen.poly(vars, 3, 4), c = gen.poly(vars, 3, 4);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a + b, b + a);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ(a.pow(2), a * a);
  }
}

TEST(MultiPolyProperty, HomogenizeDehomogenizes) {
  gen::Gen gen(2);
  for (int i = 0; i < 250; ++i) {
    MultiPoly p = gen.nonzero_poly({Var::x, Var::y}, 5, gen.integer(1, 12));
    int d = p.degree();
    MultiPoly h = homogenize(p, d);
    for (const auto& [e, c] : h.terms()) ASSERT_EQ(e[0] + e[1] + e[2], d);
    ASSERT_EQ(h.substitute({{Var::z, MultiPoly(1)}}), p);
  }
}

TEST(MultiPolyProperty, PrintReparses) {
  gen::Gen gen(3);
  for (int i = 0; i < 250; ++i) {
    MultiPoly p = gen.poly({Var::x, Var::y, Var::t, Var::z}, 4, 6);
    if (p.is_zero()) continue;
    ASSERT_EQ(parse_internal(p.to_string()), p) << p.to_string();
  }
}

TEST(UPoly, GcdAndSquarefree) {
  UPoly a = UPoly{-1, 1}.pow(2) * UPoly{2, 1};
  EXPECT_EQ(squarefree_part(a), (UPoly{-1, 1} * UPoly{2, 1}));
  auto parts = squarefree_decomposition(a);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], (UPoly{2, 1}));
  EXPECT_EQ(parts[1], (UPoly{-1, 1}));
  EXPECT_EQ(gcd(UPoly{-1, 0, 1}, UPoly{1, 1}), (UPoly{1, 1}));
}

TEST(UPolyProperty, Bezout) {
  gen::Gen gen(4);
  for (int i = 0; i < 250; ++i) {
    UPoly a = gen.upoly(gen.integer(0, 5)), b = gen.upoly(gen.integer(0, 5));
    Bezout z = xgcd(a, b);
    ASSERT_EQ(z.s * a + z.t * b, z.g);
    ASSERT_EQ(z.g, gcd(a, b));
    if (!z.g.is_zero()) {
      ASSERT_TRUE((a % z.g).is_zero());
      ASSERT_TRUE((b % z.g).is_zero());
    }
  }
}

TEST(UPoly, Printing) {
  EXPECT_EQ((UPoly{0, 0, 0, 4}).to_string(), "4*t^3");
  EXPECT_EQ((UPoly{-1, 1}).to_string(), "t-1");
  EXPECT_EQ((UPoly{Rational(1, 2), 0, -1}).to_string("y"), "-y^2+1/2");
}
