#include <rbif/numeric.hpp>

#include <rbif/error.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace rbif {

namespace {

/// A polynomial in x, y prepared for floating-point evaluation with a
/// running bound on the sum of absolute term values.
template <class R>
class Evaluator {
 public:
  using C = std::complex<R>;

  explicit Evaluator(const MultiPoly& p) {
    for (const auto& [e, c] : p.terms()) {
      if (e[2] || e[3] || e[4]) throw MathError(ErrorKind::Internal, "numeric evaluation needs a polynomial in x, y");
      terms_.push_back({static_cast<R>(c.get_d()), e[0], e[1]});
      degree_ = std::max(degree_, e[0] + e[1]);
    }
  }

  /// Value at (x, y); abs_sum receives sum |term|.
  C operator()(C x, C y, R& abs_sum) const {
    C v = 0;
    abs_sum = 0;
    for (const auto& t : terms_) {
      C term = t.c * ipow(x, t.a) * ipow(y, t.b);
      v += term;
      abs_sum += std::abs(term);
    }
    return v;
  }

  int degree() const { return degree_; }

 private:
  struct Term {
    R c;
    int a, b;
  };

  static C ipow(C z, int k) {
    C r = 1;
    for (; k > 0; k >>= 1, z *= z)
      if (k & 1) r *= z;
    return r;
  }

  std::vector<Term> terms_;
  int degree_ = 0;
};

/// f, g and the numerators of the partials of f/g.
template <class R>
struct Quotient {
  Evaluator<R> f, g, p1, p2;

  Quotient(const MultiPoly& fp, const MultiPoly& gp)
      : f(fp),
        g(gp),
        p1(fp.derivative(Var::x) * gp - fp * gp.derivative(Var::x)),
        p2(fp.derivative(Var::y) * gp - fp * gp.derivative(Var::y)) {}

  DiagnosticRow row(std::complex<double> t0d, std::complex<double> xd, std::complex<double> yd) const {
    using C = std::complex<R>;
    const R eps = std::numeric_limits<R>::epsilon();
    const C x(static_cast<R>(xd.real()), static_cast<R>(xd.imag()));
    const C y(static_cast<R>(yd.real()), static_cast<R>(yd.imag()));
    const C t0(static_cast<R>(t0d.real()), static_cast<R>(t0d.imag()));
    DiagnosticRow r;
    R sf, sg, s1, s2;
    const C gv = g(x, y, sg);
    r.norm_p = static_cast<double>(std::sqrt(std::norm(x) + std::norm(y)));
    if (std::abs(gv) <= eps * (g.degree() + 1) * sg) {
      r.skipped = true;
      return r;
    }
    const C fv = f(x, y, sf);
    const C value = fv / gv;
    const C g2 = gv * gv;
    const C v1 = p1(x, y, s1), v2 = p2(x, y, s2);
    // Gradient in the Hermitian sense: conjugate of the holomorphic partials.
    const C gx = std::conj(v1 / g2), gy = std::conj(v2 / g2);
    const R gn = std::sqrt(std::norm(gx) + std::norm(gy));
    r.value = {static_cast<double>(value.real()), static_cast<double>(value.imag())};
    r.dist = static_cast<double>(std::abs(value - t0));
    r.grad_norm = static_cast<double>(gn);
    r.malgrange = r.norm_p * r.grad_norm;
    if (gn > 0) {
      const C inner = gx * std::conj(x) + gy * std::conj(y);
      const C lambda = inner / (std::norm(x) + std::norm(y));
      const C rx = gx - lambda * x, ry = gy - lambda * y;
      r.alignment = static_cast<double>(std::sqrt(std::norm(rx) + std::norm(ry)) / gn);
    }
    auto rel = [&](R sum, C v, int deg) { return std::abs(v) > 0 ? eps * (deg + 1) * sum / std::abs(v) : R(1); };
    r.rel_error = static_cast<double>(std::max(rel(s1, v1, p1.degree()), rel(s2, v2, p2.degree())) +
                                      2 * rel(sg, gv, g.degree()));
    return r;
  }
};

DiagnosticRow evaluate_with(const MultiPoly& f, const MultiPoly& g, std::complex<double> t0, std::complex<double> x,
                            std::complex<double> y, bool extended) {
  if (extended) return Quotient<long double>(f, g).row(t0, x, y);
  return Quotient<double>(f, g).row(t0, x, y);
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

/// Coefficients in x of p(x, y) - t0 q(x, y) at a fixed y.
std::vector<std::complex<double>> x_coefficients(const std::vector<Evaluator<double>>& p,
                                                 const std::vector<Evaluator<double>>& q, std::complex<double> t0,
                                                 std::complex<double> y) {
  std::vector<std::complex<double>> c(std::max(p.size(), q.size()));
  double dummy;
  for (std::size_t k = 0; k < p.size(); ++k) c[k] += p[k](0.0, y, dummy);
  for (std::size_t k = 0; k < q.size(); ++k) c[k] -= t0 * q[k](0.0, y, dummy);
  return c;
}

std::vector<Evaluator<double>> split_in_x(const MultiPoly& p) {
  std::vector<Evaluator<double>> out;
  if (p.is_zero()) return out;
  for (const auto& c : p.coeffs(Var::x)) out.emplace_back(c);
  return out;
}

}  // namespace

WitnessCurve WitnessCurve::make(const std::string& x_text, const std::string& y_text, double s_min, double s_max, int n) {
  if (n < 1) throw MathError(ErrorKind::Parse, "a curve needs at least one sample");
  WitnessCurve c{CurveExpr::parse(x_text), CurveExpr::parse(y_text), {}, std::nullopt};
  const bool geometric = s_min > 0 && s_max > s_min;
  for (int k = 0; k < n; ++k) {
    const double u = n == 1 ? 0.0 : static_cast<double>(k) / (n - 1);
    c.samples.emplace_back(geometric ? s_min * std::pow(s_max / s_min, u) : s_min + (s_max - s_min) * u);
  }
  return c;
}

std::string WitnessCurve::to_string() const { return "(" + x.text() + ", " + y.text() + ")"; }

AlgebraicNumber parse_gaussian(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), 'i', 'u');
  MultiPoly p = parse_internal(s);
  for (Var v : {Var::x, Var::y, Var::z, Var::t})
    if (p.depends_on(v)) throw MathError(ErrorKind::Parse, "not a Gaussian rational: " + text);
  p = p.reduce_u(UPoly{1, 0, 1});
  const Rational a = p.coeff(Var::u, 0).constant_term(), b = p.coeff(Var::u, 1).constant_term();
  if (b == 0) return AlgebraicNumber::from_rational(a);
  for (const auto& r : isolate_roots(UPoly{a * a + b * b, -2 * a, 1}))
    if (sgn(r.box().center.im) == sgn(b)) return r;
  throw MathError(ErrorKind::Internal, "conjugate root not found");
}

std::vector<WitnessCurve> parse_curve_file(std::istream& in) {
  std::vector<WitnessCurve> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string field; std::getline(ss, field, ';');) fields.push_back(trim(field));
    if (fields.size() != 5 && fields.size() != 6)
      throw MathError(ErrorKind::Parse, "curve file line " + std::to_string(number) + ": expected 5 or 6 fields");
    try {
      WitnessCurve c = WitnessCurve::make(fields[0], fields[1], std::stod(fields[2]), std::stod(fields[3]), std::stoi(fields[4]));
      if (fields.size() == 6) c.t0 = parse_gaussian(fields[5]);
      out.push_back(std::move(c));
    } catch (const std::logic_error&) {
      throw MathError(ErrorKind::Parse, "curve file line " + std::to_string(number) + ": bad number");
    } catch (const MathError& e) {
      throw MathError(ErrorKind::Parse, "curve file line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

const char* to_string(Trend t) {
  switch (t) {
    case Trend::ToZero: return "→0";
    case Trend::BoundedAway: return "bounded away from 0";
    case Trend::Inconclusive: return "inconclusive";
  }
  return "";
}

std::string TrendThresholds::to_string() const {
  std::ostringstream s;
  s << "slope of log q against log|p| over the last decade: < " << to_zero_slope << " gives →0; > " << bounded_slope
    << " with final value > " << bounded_floor << " gives bounded away from 0; values below " << zero_floor
    << " count as 0";
  return s.str();
}

Trend trend(const std::vector<double>& norms, const std::vector<double>& values, const TrendThresholds& th) {
  if (norms.empty()) return Trend::Inconclusive;
  const double top = *std::max_element(norms.begin(), norms.end());
  std::vector<std::size_t> window;
  for (std::size_t k = 0; k < norms.size(); ++k)
    if (norms[k] >= top / 10) window.push_back(k);
  if (window.size() < 2) {
    window.clear();
    for (std::size_t k = 0; k < norms.size(); ++k) window.push_back(k);
  }
  if (std::all_of(window.begin(), window.end(), [&](std::size_t k) { return values[k] < th.zero_floor; }))
    return Trend::ToZero;
  if (window.size() < 2) return Trend::Inconclusive;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(window.size());
  for (std::size_t k : window) {
    const double lx = std::log(norms[k]), ly = std::log(std::max(values[k], 1e-300));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = n * sxx - sx * sx;
  if (den <= 0) return Trend::Inconclusive;
  const double slope = (n * sxy - sx * sy) / den;
  std::size_t last = window.front();
  for (std::size_t k : window)
    if (norms[k] > norms[last]) last = k;
  if (slope < th.to_zero_slope) return Trend::ToZero;
  if (slope > th.bounded_slope && values[last] > th.bounded_floor) return Trend::BoundedAway;
  return Trend::Inconclusive;
}

DiagnosticRow evaluate_point(const MultiPoly& f, const MultiPoly& g, std::complex<double> t0, std::complex<double> x,
                             std::complex<double> y, const NumericOptions& opt) {
  return evaluate_with(f, g, t0, x, y, opt.extended);
}

CurveDiagnosis diagnose_curve(const MultiPoly& f, const MultiPoly& g, std::complex<double> t0, const WitnessCurve& curve,
                              const NumericOptions& opt) {
  CurveDiagnosis d;
  d.t0 = t0;
  Quotient<double> qd(f, g);
  Quotient<long double> ql(f, g);
  std::vector<double> norms, dist, grad, malg, align;
  double previous = -1;
  for (const auto& s : curve.samples) {
    const std::complex<double> x = curve.x(s), y = curve.y(s);
    DiagnosticRow r = opt.extended ? ql.row(t0, x, y) : qd.row(t0, x, y);
    r.s = s;
    if (r.norm_p <= previous) d.escapes = false;
    previous = r.norm_p;
    d.rows.push_back(r);
    if (r.skipped) {
      ++d.skipped;
      continue;
    }
    norms.push_back(r.norm_p);
    dist.push_back(r.dist);
    grad.push_back(r.grad_norm);
    malg.push_back(r.malgrange);
    align.push_back(r.alignment);
  }
  if (!curve.samples.empty() && d.skipped == static_cast<int>(curve.samples.size()))
    throw MathError(ErrorKind::CurveInPolarLocus, "g vanishes at every sample of " + curve.to_string());
  d.dist_trend = trend(norms, dist, opt.thresholds);
  d.grad_trend = trend(norms, grad, opt.thresholds);
  d.malgrange_trend = trend(norms, malg, opt.thresholds);
  d.alignment_trend = trend(norms, align, opt.thresholds);
  return d;
}

std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& c) {
  std::size_t hi = c.size();
  while (hi > 0 && c[hi - 1] == 0.0) --hi;
  std::size_t lo = 0;
  while (lo < hi && c[lo] == 0.0) ++lo;
  std::vector<std::complex<double>> out(lo, 0.0);
  if (hi == 0) return {};
  const int n = static_cast<int>(hi - lo) - 1;
  if (n <= 0) return out;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 0; k < n; ++k) m(0, k) = -c[hi - 2 - static_cast<std::size_t>(k)] / c[hi - 1];
  for (int k = 1; k < n; ++k) m(k, k - 1) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  for (int k = 0; k < n; ++k) out.push_back(solver.eigenvalues()[k]);
  return out;
}

MalgrangeSearch search_malgrange_witness(const MultiPoly& f, const MultiPoly& g, std::complex<double> t0,
                                         const std::vector<double>& radii, const SearchOptions& opt) {
  MalgrangeSearch out;
  out.t0 = t0;
  out.grid = opt.grid;
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  out.a = {unit(rng), unit(rng)};
  out.b = 1.0;
  const double offset = (unit(rng) + 1) * std::numbers::pi / opt.grid;

  const MultiPoly p1 = f.derivative(Var::x) * g - f * g.derivative(Var::x);
  const MultiPoly p2 = f.derivative(Var::y) * g - f * g.derivative(Var::y);
  // b p1 - a p2 has complex coefficients: handle the real and imaginary
  // parts of a separately.
  const auto fx = split_in_x(f), gx = split_in_x(g), p1x = split_in_x(p1), p2x = split_in_x(p2);
  Quotient<double> qd(f, g);
  Quotient<long double> ql(f, g);

  for (double R : radii) {
    MalgrangeRow row;
    row.radius = R;
    for (int j = 0; j < opt.grid; ++j) {
      const std::complex<double> y = std::polar(R, 2 * std::numbers::pi * j / opt.grid + offset);
      auto consider = [&](const std::vector<std::complex<double>>& coeffs, const char* source) {
        for (const auto& x : polynomial_roots(coeffs)) {
          DiagnosticRow r = opt.extended ? ql.row(t0, x, y) : qd.row(t0, x, y);
          if (r.skipped || r.norm_p < R) continue;
          const double score = std::max(r.dist, r.malgrange);
          if (row.empty || score < row.score) {
            row.empty = false;
            row.score = score;
            row.source = source;
            row.best = r;
          }
        }
      };
      consider(x_coefficients(fx, gx, t0, y), "fiber");
      consider(x_coefficients(p1x, p2x, out.a / out.b, y), "polar");
    }
    out.rows.push_back(row);
  }
  std::vector<double> norms, scores;
  for (const auto& r : out.rows)
    if (!r.empty) {
      norms.push_back(r.radius);
      scores.push_back(r.score);
    }
  out.trend = trend(norms, scores, opt.thresholds);
  return out;
}

}  // namespace rbif
