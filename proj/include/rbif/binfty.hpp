#pragma once

#include <rbif/elimination.hpp>
#include <rbif/multipoly.hpp>
#include <rbif/roots.hpp>

#include <optional>
#include <string>
#include <vector>

namespace rbif {

enum class DegreeCase {
  FDominates,  ///< deg f > deg g
  GDominates,  ///< deg g > deg f
  Equal,       ///< deg f = deg g
};

const char* to_string(DegreeCase c);

struct DegreeConditionReport {
  int d = 0;
  /// deg(f - t g) = d for every t.
  bool holds_for_all_t = true;
  /// The values t0 with deg(f - t0 g) < d.
  std::vector<AlgebraicNumber> excluded_values;
  DegreeCase degree_case = DegreeCase::FDominates;
  /// Set when a specific t0 was asked about.
  std::optional<bool> holds_at_t0;
};

/// Degree condition deg(f - t0 g) = max(deg f, deg g), for all t or at t0.
DegreeConditionReport check_degree_condition(const MultiPoly& f, const MultiPoly& g,
                                             const std::optional<AlgebraicNumber>& t0 = std::nullopt);

/// Result of the shear (x, y) -> (x, y + lambda x).
struct Normalization {
  MultiPoly f, g;
  Rational lambda;
  /// e.g. "y -> y + x"; "identity" when lambda = 0.
  std::string substitution;
  /// Coefficient of x^d in f - t g after the shear, a polynomial in t.
  UPoly x_coefficient;
  /// Values outside the excluded set where x_coefficient vanishes.
  std::vector<AlgebraicNumber> bad_values;
};

/// Smallest lambda in 0, 1, -1, 2, ... making x^d appear in f - t g with a
/// coefficient that vanishes only on `excluded`; if none exists among the
/// first few, the first lambda with a nonzero coefficient and its bad values.
Normalization normalize_x_degree(const MultiPoly& f, const MultiPoly& g, int d,
                                 const std::vector<AlgebraicNumber>& excluded = {});

/// A value where the global shear was invalid, decided with its own shear.
struct Reexamination {
  AlgebraicNumber value;
  Rational lambda;
  UPoly q_k;
  bool member = false;
};

struct InfinityCriterion {
  DegreeConditionReport degree;
  Normalization normalization;
  /// disc_x of the normalized pencil, after stripping `stripped`.
  Discriminant delta;
  /// Content in t removed from the raw discriminant (factors of lc_x).
  UPoly stripped;
  int k = 0;
  /// Leading coefficient of delta in y.
  UPoly q_k;
  /// Roots of q_k outside the excluded values, and re-examined values that
  /// turned out to be members.
  std::vector<AlgebraicNumber> roots;
  /// Excluded values: the criterion does not apply there.
  std::vector<AlgebraicNumber> undetermined;
  std::vector<Reexamination> reexamined;
};

/// Discriminant criterion at infinity: t0 is a critical value at infinity
/// iff q_k(t0) = 0, on the region where the degree condition holds.
InfinityCriterion critical_values_at_infinity(const MultiPoly& f, const MultiPoly& g);

}  // namespace rbif
