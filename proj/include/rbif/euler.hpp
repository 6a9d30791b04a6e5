#pragma once

#include <rbif/critical.hpp>
#include <rbif/local.hpp>
#include <rbif/multipoly.hpp>
#include <rbif/roots.hpp>

#include <optional>
#include <string>
#include <vector>

namespace rbif {

/// A class of conjugate points of the line at infinity z = 0, in an affine
/// chart of P^2. Chart polynomials use x, y as the local coordinates.
struct InfinityPoint {
  /// Var::x for the chart x = 1 with local coordinates (y, z) -> (x, y);
  /// Var::y for the chart y = 1 with local coordinates (x, z) -> (x, y).
  Var chart = Var::x;
  AlgebraicPoint point;
  /// Homogenized f and z^(d - deg g) g, restricted to the chart.
  MultiPoly f_chart, g_chart;

  int count() const { return point.count(); }
  /// e.g. "[1 : s : 0] with s^2+1 = 0" or "[0 : 1 : 0]".
  std::string to_string() const;
};

/// Points at infinity of the fibers, independent of t when deg f > deg g.
/// Throws RequiresStrictDegree otherwise.
std::vector<InfinityPoint> points_at_infinity(const MultiPoly& f, const MultiPoly& g);

/// Milnor data and Euler characteristics for one fiber.
struct ChiRow {
  /// nullopt for the generic fiber.
  std::optional<AlgebraicNumber> t;
  int mu_affine = 0;
  int mu_infinity = 0;
  int chi_projective = 0;
  int chi_fiber = 0;
  /// False when t lies in K1, where the fiber formula is not asserted.
  bool formula_asserted = true;
};

struct ChiTable {
  int d = 0;
  int chi_smooth_projective = 0;
  int v_infinity_count = 0;
  int a_count = 0;
  std::vector<ChiRow> rows;

  const ChiRow& generic() const;
  /// The row for t0; throws Internal if absent.
  const ChiRow& at(const AlgebraicNumber& t0) const;
};

/// Everything the formulas need, computed once per pencil.
class EulerData {
 public:
  /// Throws RequiresStrictDegree unless deg f > deg g.
  EulerData(const MultiPoly& f, const MultiPoly& g);

  int d() const { return d_; }
  const std::vector<InfinityPoint>& at_infinity() const { return infinity_; }
  const std::vector<MilnorRecord>& infinity_records() const { return infinity_records_; }
  const std::vector<MilnorRecord>& a_records() const { return a_records_; }
  const std::vector<CriticalClass>& critical() const { return critical_; }
  const std::vector<AlgebraicNumber>& k0() const { return k0_; }
  const std::vector<AlgebraicNumber>& k1() const { return k1_; }
  int a_count() const;
  int v_infinity_count() const;

  /// Row for the generic fiber (nullopt) or for t0.
  ChiRow row(const std::optional<AlgebraicNumber>& t0) const;
  /// Generic row followed by one row per value, in the given order.
  ChiTable table(const std::vector<AlgebraicNumber>& values) const;

 private:
  int d_;
  std::vector<InfinityPoint> infinity_;
  std::vector<MilnorRecord> infinity_records_;
  std::vector<MilnorRecord> a_records_;
  std::vector<CriticalClass> critical_;
  std::vector<AlgebraicNumber> k0_, k1_;
};

/// 2 - (d - 1)(d - 2), the Euler characteristic of a smooth plane curve.
int chi_smooth_projective(int d);

/// chi of F^{-1}(t): the generic fiber for nullopt.
ChiRow chi_fiber(const MultiPoly& f, const MultiPoly& g, const std::optional<AlgebraicNumber>& t);

enum class JumpVerdict { InBinfty, NotInBinfty };
const char* to_string(JumpVerdict v);

struct ChiJump {
  JumpVerdict verdict = JumpVerdict::NotInBinfty;
  int chi_generic = 0;
  int chi_t0 = 0;
  /// Euler characteristics of the affine curves f - t g = 0, A(F) included.
  int curve_chi_generic = 0;
  int curve_chi_t0 = 0;
};

/// t0 is a critical value at infinity iff chi(F^{-1}(t0)) > chi(generic).
/// Throws CriterionInapplicable for t0 in K0 or K1.
ChiJump chi_jump_test(const EulerData& data, const AlgebraicNumber& t0);
ChiJump chi_jump_test(const MultiPoly& f, const MultiPoly& g, const AlgebraicNumber& t0);

}  // namespace rbif
