#include <rbif/cli.hpp>
#include <rbif/error.hpp>

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  rbif::RunConfig cfg;
  std::string diagnose, radii;
  bool json = false, no_chi = false;

  CLI::App app{"Bifurcation set of a rational function f/g of two complex variables"};
  app.add_option("--f", cfg.f_text, "numerator in x, y with rational coefficients")->required();
  app.add_option("--g", cfg.g_text, "denominator")->capture_default_str();
  app.add_flag("--json", json, "emit JSON instead of text");
  app.add_option("--precision", cfg.precision, "significant digits of approximations")->capture_default_str();
  app.add_option("--diagnose", diagnose, "curves file, or 'auto' for the Malgrange witness search");
  app.add_option("--radii", radii, "search radii a:b:n, geometric (default 10:10000:4)");
  app.add_flag("--no-chi-check", no_chi, "skip the Euler characteristic cross-check");
  app.add_option("--seed", cfg.seed, "seed of the polar direction in the witness search")->capture_default_str();
  app.add_option("--query", cfg.queries, "state B∞ membership of a Gaussian rational, e.g. i or 1/2-3i");
  app.add_flag("--extended", cfg.extended, "long double evaluation in diagnostics");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg.output = json ? rbif::OutputFormat::Json : rbif::OutputFormat::Text;
  cfg.verify_chi = !no_chi;
  if (diagnose == "auto") {
    cfg.diagnostics = rbif::DiagnosticsMode::AutoSearch;
  } else if (!diagnose.empty()) {
    cfg.diagnostics = rbif::DiagnosticsMode::CurvesFile;
    cfg.curves_path = diagnose;
  }
  if (!radii.empty()) {
    try {
      cfg.radii = rbif::parse_radii(radii);
    } catch (const rbif::MathError& e) {
      std::cerr << "rbif: --radii: " << e.what() << "\n";
      return 2;
    }
  }
  return rbif::run(cfg, std::cout, std::cerr);
}
