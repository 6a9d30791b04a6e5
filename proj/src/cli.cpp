#include <rbif/cli.hpp>

#include <rbif/error.hpp>
#include <rbif/parser.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace rbif {

namespace {

using Json = nlohmann::ordered_json;

std::string format_double(double v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

std::string format_complex(std::complex<double> z, int digits) {
  const double re = z.real(), im = z.imag();
  if (im == 0) return format_double(re, digits);
  std::string s = re == 0 ? "" : format_double(re, digits);
  std::string m = std::abs(im) == 1 ? "" : format_double(std::abs(im), digits);
  if (im < 0) s += "-";
  else if (!s.empty()) s += "+";
  return s + m + "i";
}

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

const ValueEntry* entry(const BifurcationReport& r, const AlgebraicNumber& v) {
  for (const auto& e : r.b)
    if (equal(e.value, v)) return &e;
  return nullptr;
}

Json value_json(const AlgebraicNumber& v, int digits) {
  Json j;
  j["defining"] = v.defining().to_string();
  j["approx"] = v.to_string(digits);
  return j;
}

Json tagged_json(const BifurcationReport& r, const AlgebraicNumber& v, int digits) {
  Json j = value_json(v, digits);
  const ValueEntry* e = entry(r, v);
  j["tags"] = e ? e->tags : std::vector<std::string>{};
  return j;
}

/// q_k data for one B∞ value, taken from its re-examination when it has one.
Json binfty_json(const BifurcationReport& r, const AlgebraicNumber& v, int digits) {
  Json j = value_json(v, digits);
  UPoly q = r.infinity.q_k;
  for (const auto& x : r.infinity.reexamined)
    if (equal(x.value, v)) q = x.q_k;
  j["q_k"] = q.to_string();
  j["multiplicity"] = root_multiplicity(v, q);
  return j;
}

Json milnor_json(const MilnorRecord& m, int digits) {
  Json j;
  j["point"] = m.point.to_string();
  j["mu_generic"] = m.mu_generic;
  Json at = Json::array();
  for (const auto& [t, mu] : m.mu_at) at.push_back({{"t", t.to_string(digits)}, {"mu", mu}});
  j["mu_at"] = at;
  return j;
}

Json row_json(const DiagnosticRow& row, int digits) {
  Json j;
  j["s"] = format_complex(row.s, digits);
  if (row.skipped) {
    for (const char* k : {"norm_p", "F", "dist", "grad", "malgrange", "alignment", "rel_error"}) j[k] = nullptr;
    return j;
  }
  j["norm_p"] = number(row.norm_p);
  j["F"] = format_complex(row.value, digits);
  j["dist"] = number(row.dist);
  j["grad"] = number(row.grad_norm);
  j["malgrange"] = number(row.malgrange);
  j["alignment"] = number(row.alignment);
  j["rel_error"] = number(row.rel_error);
  return j;
}

const char* mode_name(DiagnosticsMode m) {
  switch (m) {
    case DiagnosticsMode::Off: return "off";
    case DiagnosticsMode::CurvesFile: return "curves-file";
    case DiagnosticsMode::AutoSearch: return "auto-search";
  }
  return "off";
}

Json build(const BifurcationReport& r, const RunConfig& cfg, const Diagnostics& d) {
  const int p = cfg.precision;
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["input"] = {{"f", r.f.to_string()},
                {"g", r.g.to_string()},
                {"deg_f", r.deg_f},
                {"deg_g", r.deg_g},
                {"coprimality", r.coprimality}};

  Json options;
  options["output"] = cfg.output == OutputFormat::Json ? "json" : "text";
  options["precision"] = cfg.precision;
  options["diagnostics"] = mode_name(cfg.diagnostics);
  options["curves_file"] = cfg.curves_path;
  Json radii = Json::array();
  for (double x : cfg.radii) radii.push_back(x);
  options["radii"] = radii;
  options["verify_chi"] = cfg.verify_chi;
  options["seed"] = cfg.seed;
  options["queries"] = cfg.queries;
  options["extended"] = cfg.extended;
  j["options"] = options;

  Json degree;
  degree["d"] = r.degree.d;
  degree["case"] = r.deg_f > r.deg_g ? "deg f > deg g" : r.deg_f == r.deg_g ? "deg f = deg g" : "deg f < deg g";
  degree["holds_for_all_t"] = r.degree.holds_for_all_t;
  Json excluded = Json::array();
  for (const auto& v : r.degree.excluded_values) excluded.push_back(value_json(v, p));
  degree["excluded"] = excluded;
  j["degree_condition"] = degree;

  Json critical = Json::array();
  for (const auto& c : r.critical)
    critical.push_back({{"point", c.point.to_string()},
                        {"charpoly", c.charpoly.to_string()},
                        {"mu", c.mu}});
  j["critical_points"] = critical;
  j["K0_eliminant"] = r.k0_eliminant.to_string();

  Json k0 = Json::array();
  for (const auto& v : r.k0) k0.push_back(tagged_json(r, v, p));
  j["K0"] = k0;

  Json k1 = Json::array();
  for (const auto& v : r.k1) {
    Json e = tagged_json(r, v, p);
    Json recs = Json::array();
    for (const auto& m : r.milnor_records)
      if (m.max_at(v) != m.mu_generic) recs.push_back(milnor_json(m, p));
    e["records"] = recs;
    k1.push_back(e);
  }
  j["K1"] = k1;
  Json a_points = Json::array();
  for (const auto& m : r.milnor_records) a_points.push_back(milnor_json(m, p));
  j["A"] = a_points;

  Json binfty = Json::array();
  for (const auto& v : r.binfty) binfty.push_back(binfty_json(r, v, p));
  j["B_infty"] = binfty;

  const auto& inf = r.infinity;
  Json crit;
  crit["shear"] = inf.normalization.substitution;
  crit["x_coefficient"] = inf.normalization.x_coefficient.to_string();
  crit["stripped"] = inf.stripped.to_string();
  crit["delta"] = inf.delta.poly.to_string();
  crit["k"] = inf.k;
  crit["q_k"] = inf.q_k.to_string();
  Json roots = Json::array();
  for (const auto& v : inf.roots) roots.push_back(value_json(v, p));
  crit["roots"] = roots;
  Json undetermined = Json::array();
  for (const auto& v : inf.undetermined) undetermined.push_back(value_json(v, p));
  crit["undetermined"] = undetermined;
  Json re = Json::array();
  for (const auto& x : inf.reexamined)
    re.push_back({{"value", x.value.to_string(p)},
                  {"lambda", to_string(x.lambda)},
                  {"q_k", x.q_k.to_string()},
                  {"member", x.member}});
  crit["reexamined"] = re;
  j["infinity_criterion"] = crit;

  Json b;
  Json values = Json::array();
  for (const auto& e : r.b) values.push_back(tagged_json(r, e.value, p));
  b["values"] = values;
  b["relation"] = to_string(r.relation);
  j["B"] = b;

  if (r.chi_table) {
    const ChiTable& t = *r.chi_table;
    Json chi;
    chi["d"] = t.d;
    chi["chi_smooth_projective"] = t.chi_smooth_projective;
    chi["v_infinity"] = t.v_infinity_count;
    chi["a_count"] = t.a_count;
    Json rows = Json::array();
    for (const auto& row : t.rows)
      rows.push_back({{"t", row.t ? row.t->to_string(p) : std::string("generic")},
                      {"mu_affine", row.mu_affine},
                      {"mu_infinity", row.mu_infinity},
                      {"chi_projective", row.chi_projective},
                      {"chi_fiber", row.chi_fiber},
                      {"formula_asserted", row.formula_asserted}});
    chi["rows"] = rows;
    Json checks = Json::array();
    for (const auto& [v, c] : r.chi_checks)
      checks.push_back({{"t", v.to_string(p)},
                        {"verdict", to_string(c.verdict)},
                        {"chi_generic", c.chi_generic},
                        {"chi_t0", c.chi_t0}});
    chi["checks"] = checks;
    j["chi_table"] = chi;
  } else {
    j["chi_table"] = nullptr;
  }

  Json queries = Json::array();
  for (const auto& m : r.queries)
    queries.push_back({{"value", m.value.to_string(p)}, {"statement", m.statement}, {"reason", m.reason}});
  j["queries"] = queries;
  j["flags"] = r.flags;

  Json diag;
  diag["mode"] = mode_name(cfg.diagnostics);
  diag["thresholds"] = TrendThresholds{}.to_string();
  diag["notes"] = d.notes;
  Json curves = Json::array();
  for (const auto& [curve, c] : d.curves) {
    Json e;
    e["curve"] = curve.to_string();
    e["t0"] = format_complex(c.t0, p);
    e["escapes"] = c.escapes;
    e["skipped"] = c.skipped;
    e["dist_trend"] = to_string(c.dist_trend);
    e["grad_trend"] = to_string(c.grad_trend);
    e["malgrange_trend"] = to_string(c.malgrange_trend);
    e["alignment_trend"] = to_string(c.alignment_trend);
    Json rows = Json::array();
    for (const auto& row : c.rows) rows.push_back(row_json(row, p));
    e["rows"] = rows;
    curves.push_back(e);
  }
  diag["curves"] = curves;
  Json searches = Json::array();
  for (const auto& s : d.searches) {
    Json e;
    e["t0"] = format_complex(s.t0, p);
    e["polar_form"] = format_complex(s.a, p) + " x + " + format_complex(s.b, p) + " y";
    e["grid"] = s.grid;
    e["trend"] = to_string(s.trend);
    Json rows = Json::array();
    for (const auto& row : s.rows) {
      Json x;
      x["radius"] = row.radius;
      x["source"] = row.empty ? "none" : row.source;
      x["score"] = row.empty ? Json(nullptr) : number(row.score);
      x["norm_p"] = row.empty ? Json(nullptr) : number(row.best.norm_p);
      x["dist"] = row.empty ? Json(nullptr) : number(row.best.dist);
      x["malgrange"] = row.empty ? Json(nullptr) : number(row.best.malgrange);
      rows.push_back(x);
    }
    e["rows"] = rows;
    searches.push_back(e);
  }
  diag["searches"] = searches;
  j["diagnostics"] = diag;
  return j;
}

bool flat(const Json& v) { return !v.is_object() && !v.is_array(); }

/// Scalars, and arrays of scalars joined by commas.
bool cell(const Json& v) { return flat(v) || (v.is_array() && std::all_of(v.begin(), v.end(), flat)); }

std::string scalar(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + scalar(x);
    return s.empty() ? "(none)" : s;
  }
  return v.dump();
}

/// Arrays of objects with the same scalar fields print as tables.
bool tabular(const Json& a) {
  if (!a.is_array() || a.empty() || !a.front().is_object()) return false;
  std::vector<std::string> keys;
  for (const auto& [k, v] : a.front().items()) keys.push_back(k);
  for (const auto& row : a) {
    if (!row.is_object() || row.size() != keys.size()) return false;
    std::size_t i = 0;
    for (const auto& [k, v] : row.items())
      if (k != keys[i++] || !cell(v)) return false;
  }
  return true;
}

std::size_t width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

void pad(std::ostream& os, const std::string& s, std::size_t w) {
  os << s;
  for (std::size_t i = width(s); i < w; ++i) os << ' ';
}

void render(std::ostream& os, const std::string& key, const Json& v, int indent) {
  const std::string in(indent, ' ');
  if (flat(v)) {
    os << in << key << ": " << scalar(v) << "\n";
  } else if (v.is_array() && v.empty()) {
    os << in << key << ": (none)\n";
  } else if (cell(v) && key != "flags" && key != "notes") {
    os << in << key << ": " << scalar(v) << "\n";
  } else if (cell(v)) {
    os << in << key << ":\n";
    for (const auto& x : v) os << in << "  - " << scalar(x) << "\n";
  } else if (tabular(v)) {
    os << in << key << ":\n";
    std::vector<std::string> keys;
    for (const auto& [k, x] : v.front().items()) keys.push_back(k);
    std::vector<std::size_t> w(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      w[i] = width(keys[i]);
      for (const auto& row : v) w[i] = std::max(w[i], width(scalar(row[keys[i]])));
    }
    os << in << "  ";
    for (std::size_t i = 0; i < keys.size(); ++i) pad(os, keys[i], w[i] + 2);
    os << "\n";
    for (const auto& row : v) {
      os << in << "  ";
      for (std::size_t i = 0; i < keys.size(); ++i) pad(os, scalar(row[keys[i]]), w[i] + 2);
      os << "\n";
    }
  } else if (v.is_array()) {
    os << in << key << ":\n";
    for (std::size_t n = 0; n < v.size(); ++n) render(os, "[" + std::to_string(n + 1) + "]", v[n], indent + 2);
  } else {
    os << in << key << ":\n";
    for (const auto& [k, x] : v.items()) render(os, k, x, indent + 2);
  }
}

std::vector<AlgebraicNumber> curve_targets(const BifurcationReport& r) {
  if (!r.queries.empty()) {
    std::vector<AlgebraicNumber> out;
    for (const auto& m : r.queries) out.push_back(m.value);
    return out;
  }
  std::vector<AlgebraicNumber> out;
  for (const auto& e : r.b) out.push_back(e.value);
  return out;
}

int input_error(std::ostream& err, const std::string& what) {
  err << "rbif: " << what << "\n";
  return 2;
}

}  // namespace

std::vector<double> parse_radii(const std::string& text) {
  std::istringstream is(text);
  double a = 0, b = 0;
  int n = 0;
  char c1 = 0, c2 = 0;
  if (!(is >> a >> c1 >> b >> c2 >> n) || c1 != ':' || c2 != ':' || !(is >> std::ws).eof())
    throw ParseError(1, "radii must look like a:b:n");
  if (!(a > 0) || !(b >= a) || n < 1 || !std::isfinite(b)) throw ParseError(1, "radii need 0 < a <= b and n >= 1");
  std::vector<double> out;
  for (int k = 0; k < n; ++k) out.push_back(n == 1 ? a : a * std::pow(b / a, double(k) / (n - 1)));
  return out;
}

Diagnostics run_diagnostics(const BifurcationReport& r, const RunConfig& cfg) {
  Diagnostics d;
  NumericOptions nopt;
  nopt.extended = cfg.extended;
  if (cfg.diagnostics == DiagnosticsMode::CurvesFile) {
    std::ifstream in(cfg.curves_path);
    if (!in) throw MathError(ErrorKind::Parse, "cannot open " + cfg.curves_path);
    const auto curves = parse_curve_file(in);
    for (std::size_t n = 0; n < curves.size(); ++n) {
      const WitnessCurve& c = curves[n];
      std::vector<AlgebraicNumber> targets = c.t0 ? std::vector<AlgebraicNumber>{*c.t0} : curve_targets(r);
      if (targets.empty()) d.notes.push_back("curve " + std::to_string(n + 1) + ": no target value");
      for (const auto& t : targets) {
        try {
          d.curves.emplace_back(c, diagnose_curve(r.f, r.g, t.approx(), c, nopt));
        } catch (const MathError& e) {
          if (e.kind() != ErrorKind::CurveInPolarLocus) throw;
          d.notes.push_back("curve " + std::to_string(n + 1) + ": " + e.what());
        }
      }
    }
  } else if (cfg.diagnostics == DiagnosticsMode::AutoSearch) {
    SearchOptions sopt;
    sopt.extended = cfg.extended;
    sopt.seed = cfg.seed;
    std::vector<AlgebraicNumber> targets;
    for (const auto& e : r.b) targets.push_back(e.value);
    for (const auto& m : r.queries)
      if (!member(m.value, targets)) targets.push_back(m.value);
    targets.push_back(generic_value(r));
    for (const auto& t : targets) d.searches.push_back(search_malgrange_witness(r.f, r.g, t.approx(), cfg.radii, sopt));
  }
  return d;
}

std::string report_json(const BifurcationReport& r, const RunConfig& cfg, const Diagnostics& d) {
  return build(r, cfg, d).dump(2) + "\n";
}

std::string report_text(const BifurcationReport& r, const RunConfig& cfg, const Diagnostics& d) {
  const Json j = build(r, cfg, d);
  std::ostringstream os;
  for (const auto& [k, v] : j.items()) render(os, k, v, 0);
  return os.str();
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  MultiPoly f, g;
  BifurcationOptions opt;
  opt.verify_chi = cfg.verify_chi;
  opt.precision = cfg.precision;
  if (cfg.precision < 1 || cfg.precision > 60) return input_error(err, "precision must lie in 1..60");
  if (cfg.radii.empty()) return input_error(err, "no radii");
  for (double x : cfg.radii)
    if (!(x > 0) || !std::isfinite(x)) return input_error(err, "radii must be positive");
  try {
    f = parse(cfg.f_text);
  } catch (const ParseError& e) {
    return input_error(err, std::string("f: ") + e.what());
  }
  try {
    g = parse(cfg.g_text);
  } catch (const ParseError& e) {
    return input_error(err, std::string("g: ") + e.what());
  }
  for (const auto& q : cfg.queries) {
    try {
      opt.queries.push_back(parse_gaussian(q));
    } catch (const MathError& e) {
      return input_error(err, "query " + q + ": " + e.what());
    }
  }
  if (cfg.diagnostics == DiagnosticsMode::CurvesFile) {
    std::ifstream in(cfg.curves_path);
    if (!in) return input_error(err, "cannot open " + cfg.curves_path);
    try {
      parse_curve_file(in);
    } catch (const MathError& e) {
      return input_error(err, cfg.curves_path + ": " + e.what());
    }
  }
  try {
    BifurcationReport r = bifurcation_set(f, g, opt);
    Diagnostics d = run_diagnostics(r, cfg);
    out << (cfg.output == OutputFormat::Json ? report_json(r, cfg, d) : report_text(r, cfg, d));
    return 0;
  } catch (const MathError& e) {
    err << "rbif: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::CommonFactor:
      case ErrorKind::DegenerateCriticalLocus:
      case ErrorKind::PencilNonReduced: return 3;
      case ErrorKind::ZeroOperand:
      case ErrorKind::Parse: return 2;
      default: return 1;
    }
  } catch (const std::exception& e) {
    err << "rbif: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace rbif
