#pragma once

#include <rbif/multipoly.hpp>
#include <rbif/rational.hpp>
#include <rbif/upoly.hpp>

#include <complex>
#include <string>
#include <vector>

namespace rbif {

/// Closed axis-aligned square [c.re - r, c.re + r] x [c.im - r, c.im + r].
struct ComplexBox {
  ComplexRational center;
  Rational radius;

  Rational width() const { return 2 * radius; }
  bool contains(const ComplexRational& z) const;
  bool contains(const ComplexBox& b) const;
  bool intersects(const ComplexBox& b) const;
  std::complex<double> approx() const { return {center.re.get_d(), center.im.get_d()}; }
};

/// One complex root of a squarefree rational polynomial.
///
/// The box is certified to contain exactly one root of `defining`, and the
/// disc of radius 1.5 * box.radius about its center contains no other.
class AlgebraicNumber {
 public:
  AlgebraicNumber(UPoly defining, ComplexBox box, int multiplicity);
  static AlgebraicNumber from_rational(const Rational& q);

  /// Squarefree, primitive, positive leading coefficient.
  const UPoly& defining() const { return defining_; }
  const ComplexBox& box() const { return box_; }
  int multiplicity() const { return multiplicity_; }
  AlgebraicNumber with_multiplicity(int m) const { return {defining_, box_, m}; }

  /// The box is symmetric about the real axis, so the root is real.
  bool is_real() const { return sgn(box_.center.im) == 0; }
  bool is_rational() const { return defining_.degree() == 1; }
  bool is_zero() const { return is_rational() && defining_.eval(Rational(0)) == 0; }
  /// Exact value; requires is_rational().
  Rational rational_value() const;
  std::complex<double> approx() const { return box_.approx(); }

  /// Decimal text with `digits` significant digits, e.g. "0", "-1.5", "0.5+0.8660254i".
  std::string to_string(int digits = 12) const;

 private:
  UPoly defining_;
  ComplexBox box_;
  int multiplicity_;
};

/// All distinct complex roots of p, with multiplicities summing to deg p.
/// Throws ZeroPolynomial for p = 0; returns nothing for nonzero constants.
/// Results are ordered by (Re, Im) of box centers.
std::vector<AlgebraicNumber> isolate_roots(const UPoly& p);
/// p must involve at most one variable.
std::vector<AlgebraicNumber> isolate_roots(const MultiPoly& p);

/// Same root with a certified box of width <= width (width > 0).
AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& width);

/// Exact equality of algebraic numbers.
bool equal(const AlgebraicNumber& a, const AlgebraicNumber& b);
bool member(const AlgebraicNumber& a, const std::vector<AlgebraicNumber>& set);
/// True iff q(a) = 0.
bool is_root_of(const AlgebraicNumber& a, const UPoly& q);
/// Multiplicity of a as a root of q (0 if it is not a root).
int root_multiplicity(const AlgebraicNumber& a, const UPoly& q);

/// Strict order by (Re, Im) of box centers, then by defining degree.
bool display_less(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// Pellet test: true proves p has exactly k roots in the open disc |z - c| < r.
bool pellet_test(const UPoly& p, const ComplexRational& c, const Rational& r, int k);

}  // namespace rbif
