#pragma once

#include <rbif/multipoly.hpp>

#include <string>
#include <vector>

namespace rbif {

/// disc_v(p) together with the convention that produced it.
struct Discriminant {
  MultiPoly poly;
  Var eliminated = Var::x;
  /// Always "classical": (-1)^(n(n-1)/2) * Res(p, dp/dv) / lc_v(p).
  std::string normalization = "classical";
};

/// Sylvester resultant of p and q with respect to v, computed with the
/// subresultant PRS. Throws ZeroOperand if either input is zero.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, Var v);

/// Classical discriminant; throws ConstantInVariable when deg_v(p) = 0.
Discriminant discriminant(const MultiPoly& p, Var v);

/// Subresultant polynomial remainder sequence of p, q in v (p, q first).
std::vector<MultiPoly> subresultant_prs(const MultiPoly& p, const MultiPoly& q, Var v);

/// Multivariate gcd, normalized to be primitive with positive leading
/// coefficient. gcd(0, 0) = 0; a nonzero constant gcd is returned as 1.
MultiPoly gcd(const MultiPoly& p, const MultiPoly& q);
/// gcd computed with v as the main variable; same result up to normalization.
MultiPoly gcd(const MultiPoly& p, const MultiPoly& q, Var v);

/// gcd of the coefficients of p viewed as a polynomial in v.
MultiPoly content(const MultiPoly& p, Var v);
MultiPoly primitive_part(const MultiPoly& p, Var v);
/// p / gcd(p, dp/dv), primitive.
MultiPoly squarefree_part(const MultiPoly& p, Var v);

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b, in v.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, Var v);

}  // namespace rbif
