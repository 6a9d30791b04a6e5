#pragma once

#include <rbif/multipoly.hpp>
#include <rbif/roots.hpp>
#include <rbif/upoly.hpp>

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace rbif {

/// A class of conjugate points of C^2: (x, y) = (X(u), Y(u)) where u runs
/// over the roots of the monic squarefree modulus m(u).
struct AlgebraicPoint {
  UPoly modulus;
  MultiPoly x, y;

  static AlgebraicPoint rational(const Rational& a, const Rational& b);
  /// Number of geometric points in the class.
  int count() const { return modulus.degree(); }
  /// The same class over a factor of the modulus.
  AlgebraicPoint restrict_to(const UPoly& factor) const;
  /// Floating-point coordinates of every conjugate point.
  std::vector<std::array<std::complex<double>, 2>> approximate() const;
  /// Certified boxes containing the coordinates of every conjugate point,
  /// obtained from isolating boxes of the modulus of width <= width.
  std::vector<std::array<ComplexBox, 2>> enclosures(const Rational& width) const;
  std::string to_string() const;
};

/// V(p, q) for coprime p, q in x, y. Throws PositiveDimensional otherwise.
std::vector<AlgebraicPoint> solve_system(const MultiPoly& p, const MultiPoly& q);

/// h(x + X, y + Y) reduced modulo the point's modulus.
MultiPoly translate_to_origin(const MultiPoly& h, const AlgebraicPoint& pt);

/// An integer attached to the conjugates of a point over one factor of its
/// modulus.
struct BranchValue {
  UPoly modulus;
  int value = 0;
};

/// Local intersection numbers at pt, one per splitting branch. Coefficients
/// may involve t; then t is treated as transcendental.
std::vector<BranchValue> intersection_multiplicities(const MultiPoly& p, const MultiPoly& q,
                                                     const AlgebraicPoint& pt);
/// The common value over all conjugates; throws NonUniform if they differ
/// and NonIsolated if pt is not an isolated point of V(p, q).
int intersection_multiplicity(const MultiPoly& p, const MultiPoly& q, const AlgebraicPoint& pt);
/// Sum over every conjugate point of the class.
int total_intersection_multiplicity(const MultiPoly& p, const MultiPoly& q, const AlgebraicPoint& pt);

/// Milnor number of h at pt (0 at regular points). NonIsolatedSingularity
/// if pt is a non-isolated critical point.
int milnor_number(const MultiPoly& h, const AlgebraicPoint& pt);

/// Local data at the conjugates that share one t-value set after
/// specializing t to the roots of a polynomial.
struct Specialization {
  /// Monic; its roots are the t-values, each repeated once per conjugate
  /// point that carries it.
  UPoly charpoly;
  int mu = 0;
};

/// Intersection number of two t-dependent curves at a class of points, for
/// transcendental t and at every value where it may change.
struct MilnorRecord {
  AlgebraicPoint point;
  int mu_generic = 0;
  /// Every t-dependent coefficient whose vanishing would change the
  /// computation path, as polynomials in t and u.
  std::vector<MultiPoly> branch_conditions;
  /// Squarefree polynomial in t whose roots are the candidates; 1 if none.
  UPoly candidate_poly;
  std::vector<AlgebraicNumber> candidates;
  /// Largest value over the conjugate points at each candidate.
  std::vector<std::pair<AlgebraicNumber, int>> mu_at;
  std::vector<Specialization> specializations;

  /// Largest value over conjugates at t0; mu_generic off the candidates.
  int max_at(const AlgebraicNumber& t0) const;
  /// Sum over all conjugate points of the class at t0.
  int sum_at(const AlgebraicNumber& t0) const;
  /// Candidates where some conjugate exceeds mu_generic.
  std::vector<AlgebraicNumber> jump_values() const;
};

/// I_pt(p, q) with p, q in x, y, t. One record per splitting branch.
std::vector<MilnorRecord> parametric_intersection(const MultiPoly& p, const MultiPoly& q, const AlgebraicPoint& pt);
/// Milnor number of f - t g at pt for transcendental t and at candidates.
std::vector<MilnorRecord> milnor_parametric(const MultiPoly& f, const MultiPoly& g, const AlgebraicPoint& pt);

/// Specializes translated p, q (in x, y, t, u modulo m) at the roots of n(t).
std::vector<Specialization> specialize(const MultiPoly& p, const MultiPoly& q, const UPoly& m, const UPoly& n);

/// Res_u(m(u), c(t, u)) as a polynomial in t.
UPoly norm_in_t(const MultiPoly& c, const UPoly& m);

}  // namespace rbif
