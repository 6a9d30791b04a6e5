#pragma once

#include <rbif/multipoly.hpp>
#include <rbif/parser.hpp>
#include <rbif/roots.hpp>

#include <complex>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace rbif {

/// A curve p(s) = (x(s), y(s)) sampled at finitely many parameter values.
struct WitnessCurve {
  CurveExpr x, y;
  std::vector<std::complex<double>> samples;
  /// Target value, when the curve file names one.
  std::optional<AlgebraicNumber> t0;

  /// n samples from s_min to s_max, geometric when 0 < s_min < s_max and
  /// linear otherwise.
  static WitnessCurve make(const std::string& x_text, const std::string& y_text, double s_min, double s_max, int n);
  std::string to_string() const;
};

/// One curve per line: `x(s); y(s); s_min; s_max; samples[; t0]`.
/// Blank lines and lines starting with '#' are skipped. t0 is a Gaussian
/// rational in the polynomial grammar with the unit i, e.g. "i" or "1/2-3i".
std::vector<WitnessCurve> parse_curve_file(std::istream& in);

/// Exact Gaussian rational from text such as "2", "-1/3 + 2i".
AlgebraicNumber parse_gaussian(const std::string& text);

struct DiagnosticRow {
  std::complex<double> s;
  double norm_p = 0;
  std::complex<double> value;
  double dist = 0;
  double grad_norm = 0;
  /// norm_p * grad_norm.
  double malgrange = 0;
  /// |grad F - (<grad F, p>/<p, p>) p| / |grad F|, with grad F = conj(dF).
  double alignment = 0;
  /// Estimated relative rounding error of the gradient.
  double rel_error = 0;
  /// g(p) = 0 to working precision; other fields are unset.
  bool skipped = false;
};

enum class Trend { ToZero, BoundedAway, Inconclusive };
const char* to_string(Trend t);

/// Least-squares slope of log(quantity) against log|p| over the last decade
/// of |p|: slope < to_zero_slope gives ToZero; slope > bounded_slope with
/// the last value above bounded_floor gives BoundedAway; otherwise
/// Inconclusive. Quantities below zero_floor throughout count as ToZero.
struct TrendThresholds {
  double to_zero_slope = -0.2;
  double bounded_slope = -0.05;
  double bounded_floor = 1e-3;
  double zero_floor = 1e-14;
  std::string to_string() const;
};

Trend trend(const std::vector<double>& norms, const std::vector<double>& values, const TrendThresholds& th = {});

struct NumericOptions {
  /// Evaluate in long double instead of double.
  bool extended = false;
  TrendThresholds thresholds;
};

struct CurveDiagnosis {
  std::complex<double> t0;
  std::vector<DiagnosticRow> rows;
  Trend dist_trend = Trend::Inconclusive;
  Trend grad_trend = Trend::Inconclusive;
  Trend malgrange_trend = Trend::Inconclusive;
  Trend alignment_trend = Trend::Inconclusive;
  /// |p(s)| increases along the samples.
  bool escapes = true;
  int skipped = 0;
};

/// Tabulates |F - t0|, |grad F|, |p| |grad F| and the alignment residual
/// along the curve. Throws CurveInPolarLocus when g vanishes at every sample.
CurveDiagnosis diagnose_curve(const MultiPoly& f, const MultiPoly& g, std::complex<double> t0, const WitnessCurve& curve,
                              const NumericOptions& opt = {});

/// Evaluates F and its holomorphic gradient at p.
DiagnosticRow evaluate_point(const MultiPoly& f, const MultiPoly& g, std::complex<double> t0,
                             std::complex<double> x, std::complex<double> y, const NumericOptions& opt = {});

struct MalgrangeRow {
  double radius = 0;
  /// No candidate point found at this radius.
  bool empty = true;
  /// "fiber" or "polar".
  std::string source;
  /// max(|F - t0|, |p| |grad F|) at the best point.
  double score = 0;
  DiagnosticRow best;
};

struct MalgrangeSearch {
  std::complex<double> t0;
  /// The polar curve of F relative to the linear form a x + b y.
  std::complex<double> a, b;
  int grid = 64;
  std::vector<MalgrangeRow> rows;
  Trend trend = Trend::Inconclusive;
};

struct SearchOptions : NumericOptions {
  int grid = 64;
  std::uint64_t seed = 0;
};

/// For each radius R samples y on |y| = R, solves for x on the fiber
/// f = t0 g and on the polar curve b F_x = a F_y, keeps points with
/// |p| >= R and records the smallest score.
MalgrangeSearch search_malgrange_witness(const MultiPoly& f, const MultiPoly& g, std::complex<double> t0,
                                         const std::vector<double>& radii, const SearchOptions& opt = {});

/// Roots of sum_k c[k] z^k (companion matrix eigenvalues).
std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& c);

}  // namespace rbif
