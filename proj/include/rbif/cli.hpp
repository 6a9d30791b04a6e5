#pragma once

#include <rbif/bifurcation.hpp>
#include <rbif/numeric.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace rbif {

enum class OutputFormat { Text, Json };
enum class DiagnosticsMode { Off, CurvesFile, AutoSearch };

struct RunConfig {
  std::string f_text;
  std::string g_text = "1";
  OutputFormat output = OutputFormat::Text;
  /// Significant digits for approximations.
  int precision = 12;
  DiagnosticsMode diagnostics = DiagnosticsMode::Off;
  std::string curves_path;
  /// Radii for the Malgrange search.
  std::vector<double> radii = {1e1, 1e2, 1e3, 1e4};
  bool verify_chi = true;
  std::uint64_t seed = 0;
  /// Gaussian rationals whose B∞ membership is stated explicitly.
  std::vector<std::string> queries;
  /// Long double evaluation for the diagnostics.
  bool extended = false;
};

/// "a:b:n" gives n geometrically spaced radii from a to b (0 < a <= b, n >= 1).
/// Throws Parse on malformed text.
std::vector<double> parse_radii(const std::string& text);

struct Diagnostics {
  std::vector<std::pair<WitnessCurve, CurveDiagnosis>> curves;
  std::vector<MalgrangeSearch> searches;
  std::vector<std::string> notes;
};

/// Runs the configured diagnostics against a finished report.
Diagnostics run_diagnostics(const BifurcationReport& r, const RunConfig& cfg);

/// Serialized report with a fixed key order.
std::string report_json(const BifurcationReport& r, const RunConfig& cfg, const Diagnostics& d);
/// The same content as report_json laid out for reading.
std::string report_text(const BifurcationReport& r, const RunConfig& cfg, const Diagnostics& d);

/// 0 on success, 2 on input errors, 3 for CommonFactor,
/// DegenerateCriticalLocus and PencilNonReduced, 1 otherwise. The report goes
/// to out, error messages to err.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

inline constexpr int kSchemaVersion = 1;

}  // namespace rbif
