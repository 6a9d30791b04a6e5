#include <rbif/roots.hpp>

#include <rbif/error.hpp>

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>

namespace rbif {

namespace {

using Big = boost::multiprecision::mpfr_float;

template <class R>
struct Cx {
  R re, im;
};

template <class R>
Cx<R> operator+(const Cx<R>& a, const Cx<R>& b) { return {a.re + b.re, a.im + b.im}; }
template <class R>
Cx<R> operator-(const Cx<R>& a, const Cx<R>& b) { return {a.re - b.re, a.im - b.im}; }
template <class R>
Cx<R> operator*(const Cx<R>& a, const Cx<R>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class R>
R norm2(const Cx<R>& a) { return a.re * a.re + a.im * a.im; }
template <class R>
Cx<R> operator/(const Cx<R>& a, const Cx<R>& b) {
  R n = norm2(b);
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

template <class R>
R from_q(const Rational& q);
template <>
double from_q<double>(const Rational& q) { return q.get_d(); }
template <>
Big from_q<Big>(const Rational& q) {
  Big r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Rational to_q(double x) { return Rational(x); }
Rational to_q(const Big& x) {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), x.backend().data());
  return q;
}

double to_d(double x) { return x; }
double to_d(const Big& x) { return x.convert_to<double>(); }

/// Sets the working precision of Big for the lifetime of the guard.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(int bits) : saved_(Big::default_precision()) {
    Big::default_precision(static_cast<unsigned>(bits * 0.30103) + 2);
  }
  ~PrecisionGuard() { Big::default_precision(saved_); }

 private:
  unsigned saved_;
};

/// Simultaneous Aberth iteration. Returns approximations of all roots of p.
template <class R>
std::vector<Cx<R>> aberth(const UPoly& p, int bits) {
  const int n = p.degree();
  std::vector<Cx<R>> z;
  if (n < 1) return z;
  std::vector<R> a;
  for (const auto& c : p.coeffs()) a.push_back(from_q<R>(c / p.leading()));

  // Initial circle from the Fujiwara bound and the geometric mean of roots.
  double bound = 0;
  for (int k = 1; k <= n; ++k) {
    double c = std::abs(to_d(a[static_cast<std::size_t>(n - k)]));
    if (c > 0) bound = std::max(bound, std::pow(c, 1.0 / k));
  }
  double a0 = std::abs(to_d(a[0]));
  double radius = a0 > 0 ? std::pow(a0, 1.0 / n) : bound / 2;
  if (!(radius > 0) || !std::isfinite(radius)) radius = 1;
  const double pi = 3.14159265358979323846;
  for (int k = 0; k < n; ++k) {
    double ang = 2 * pi * k / n + 0.7;
    z.push_back({R(radius * std::cos(ang)), R(radius * std::sin(ang))});
  }

  R eps = R(1);
  for (int k = 6; k < bits; ++k) eps /= 2;
  const R tol = eps * eps;
  const int max_iter = 200 + 20 * n;
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  for (int it = 0; it < max_iter; ++it) {
    bool all = true;
    for (int k = 0; k < n; ++k) {
      if (done[static_cast<std::size_t>(k)]) continue;
      Cx<R> zk = z[static_cast<std::size_t>(k)];
      Cx<R> v{a[static_cast<std::size_t>(n)], R(0)}, d{R(0), R(0)};
      for (int j = n - 1; j >= 0; --j) {
        d = d * zk + v;
        v = v * zk + Cx<R>{a[static_cast<std::size_t>(j)], R(0)};
      }
      if (norm2(v) == 0) {
        done[static_cast<std::size_t>(k)] = true;
        continue;
      }
      if (norm2(d) == 0) d = Cx<R>{R(1e-30), R(0)};
      Cx<R> ratio = v / d, s{R(0), R(0)};
      for (int j = 0; j < n; ++j)
        if (j != k) s = s + Cx<R>{R(1), R(0)} / (zk - z[static_cast<std::size_t>(j)]);
      Cx<R> w = ratio / (Cx<R>{R(1), R(0)} - ratio * s);
      z[static_cast<std::size_t>(k)] = zk - w;
      if (norm2(w) <= tol * (R(1) + norm2(zk)))
        done[static_cast<std::size_t>(k)] = true;
      else
        all = false;
    }
    if (all) break;
  }
  return z;
}

std::vector<ComplexRational> approximate_roots(const UPoly& p, int bits) {
  std::vector<ComplexRational> out;
  if (bits <= 53) {
    for (const auto& z : aberth<double>(p, 53)) {
      if (!std::isfinite(z.re) || !std::isfinite(z.im)) return {};
      out.push_back({to_q(z.re), to_q(z.im)});
    }
  } else {
    PrecisionGuard guard(bits);
    for (const auto& z : aberth<Big>(p, bits)) out.push_back({to_q(z.re), to_q(z.im)});
  }
  return out;
}

Rational power_of_two(long k) {
  if (k >= 0) return Rational(Integer(1) << static_cast<mp_bitcnt_t>(k));
  return Rational(Integer(1), Integer(1) << static_cast<mp_bitcnt_t>(-k));
}

/// Largest power of two not exceeding x > 0.
Rational floor_power_of_two(const Rational& x) {
  int ex = 0;
  std::frexp(x.get_d(), &ex);
  Rational r = power_of_two(ex - 1);
  while (r > x) r /= 2;
  while (2 * r <= x) r *= 2;
  return r;
}

/// Certified unique root of every listed polynomial in the disc of radius r
/// and of radius 1.5 r about c.
bool isolates(const std::vector<const UPoly*>& polys, const ComplexRational& c, const Rational& r) {
  Rational big = r * Rational(3, 2);
  for (const UPoly* p : polys)
    if (!pellet_test(*p, c, r, 1) || !pellet_test(*p, c, big, 1)) return false;
  return true;
}

/// Tries to certify a box about c for the listed polynomials, shrinking the
/// radius from r0 down to the precision floor.
std::optional<ComplexBox> certify(const std::vector<const UPoly*>& polys, ComplexRational c, Rational r,
                                  const Rational& floor) {
  for (; r >= floor; r /= 4) {
    if (abs(c.im) * 4 <= r) {
      ComplexRational real{c.re, 0};
      if (isolates(polys, real, r)) return ComplexBox{real, r};
    }
    if (isolates(polys, c, r)) return ComplexBox{c, r};
  }
  return std::nullopt;
}

struct Isolation {
  std::vector<ComplexBox> boxes;
  std::vector<int> multiplicity;
};

std::optional<Isolation> isolate_at(const UPoly& sqfree, const std::vector<UPoly>& parts, int bits) {
  Isolation out;
  std::vector<std::pair<ComplexRational, int>> approx;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() < 1) continue;
    if (parts[i].degree() == 1) {
      approx.push_back({ComplexRational(-parts[i].coeff(0) / parts[i].coeff(1)), static_cast<int>(i)});
      continue;
    }
    auto z = approximate_roots(parts[i], bits);
    if (static_cast<int>(z.size()) != parts[i].degree()) return std::nullopt;
    for (auto& c : z) approx.push_back({c, static_cast<int>(i)});
  }
  const std::size_t n = approx.size();
  for (std::size_t j = 0; j < n; ++j) {
    const auto& [c, i] = approx[j];
    std::optional<Rational> sep2;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      Rational d = (c - approx[k].first).norm();
      if (!sep2 || d < *sep2) sep2 = d;
    }
    Rational r0;
    if (!sep2) {
      r0 = Rational(1, 1 << 20);
    } else {
      if (*sep2 == 0) return std::nullopt;
      r0 = floor_power_of_two(Rational(std::sqrt(sep2->get_d()) / 8));
    }
    Rational scale = std::max(Rational(1), Rational(abs(c.re) + abs(c.im)));
    Rational floor = power_of_two(-(bits - 10)) * scale;
    std::vector<const UPoly*> polys{&sqfree};
    if (!(parts[static_cast<std::size_t>(i)] == sqfree)) polys.push_back(&parts[static_cast<std::size_t>(i)]);
    auto box = certify(polys, c, r0, std::min(floor, r0));
    if (!box) return std::nullopt;
    out.boxes.push_back(*box);
    out.multiplicity.push_back(i + 1);
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k)
      if (out.boxes[j].intersects(out.boxes[k])) return std::nullopt;
  return out;
}

Isolation isolate_squarefree(const UPoly& sqfree, const std::vector<UPoly>& parts) {
  for (int bits = 53; bits <= 1 << 14; bits *= 2) {
    if (auto r = isolate_at(sqfree, parts, bits)) return *r;
    if (bits == 53) bits = 64;
  }
  throw MathError(ErrorKind::Internal, "root isolation did not certify for " + sqfree.to_string());
}

std::string format_part(const Rational& v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v.get_d());
  return buf;
}

}  // namespace

bool ComplexBox::contains(const ComplexRational& z) const {
  return abs(z.re - center.re) <= radius && abs(z.im - center.im) <= radius;
}

bool ComplexBox::contains(const ComplexBox& b) const {
  return abs(b.center.re - center.re) + b.radius <= radius && abs(b.center.im - center.im) + b.radius <= radius;
}

bool ComplexBox::intersects(const ComplexBox& b) const {
  return abs(b.center.re - center.re) <= radius + b.radius && abs(b.center.im - center.im) <= radius + b.radius;
}

bool pellet_test(const UPoly& p, const ComplexRational& c, const Rational& r, int k) {
  const int n = p.degree();
  if (n < k || k < 0) return false;
  std::vector<ComplexRational> a;
  for (const auto& q : p.coeffs()) a.emplace_back(q);
  // Taylor shift p(c + z) by repeated synthetic division.
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) a[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j)] + c * a[static_cast<std::size_t>(j + 1)];
  Rational rest = 0, power = 1, lead = 0;
  for (int j = 0; j <= n; ++j) {
    const auto& aj = a[static_cast<std::size_t>(j)];
    if (j == k) {
      lead = aj.norm() * power * power;
    } else {
      rest += abs_upper(aj) * power;
    }
    power *= r;
  }
  return lead > rest * rest;
}

AlgebraicNumber::AlgebraicNumber(UPoly defining, ComplexBox box, int multiplicity)
    : defining_(std::move(defining)), box_(std::move(box)), multiplicity_(multiplicity) {}

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& q) {
  UPoly def = UPoly{-q, 1}.primitive();
  return {def, ComplexBox{ComplexRational(q), Rational(1, 1 << 20)}, 1};
}

Rational AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw MathError(ErrorKind::Internal, "algebraic number is not rational");
  return -defining_.coeff(0) / defining_.coeff(1);
}

std::string AlgebraicNumber::to_string(int digits) const {
  if (is_rational()) {
    Rational q = rational_value();
    if (q.get_den() == 1) return q.get_str();
    return format_part(q, digits);
  }
  Rational scale = std::max(Rational(1), Rational(abs(box_.center.re) + abs(box_.center.im)));
  Integer tens = 1;
  for (int i = 0; i < digits + 2; ++i) tens *= 10;
  Rational width = scale / Rational(tens);
  AlgebraicNumber fine = refine(*this, width);
  const ComplexBox& b = fine.box();
  bool re_zero = abs(b.center.re) <= b.radius, im_zero = sgn(b.center.im) == 0 || abs(b.center.im) <= b.radius;
  std::string re = re_zero ? "0" : format_part(b.center.re, digits);
  if (im_zero) return re;
  std::string im = format_part(abs(b.center.im), digits);
  if (im == "1") im.clear();
  if (re_zero) return (sgn(b.center.im) < 0 ? "-" : "") + im + "i";
  return re + (sgn(b.center.im) < 0 ? "-" : "+") + im + "i";
}

std::vector<AlgebraicNumber> isolate_roots(const UPoly& p) {
  if (p.is_zero()) throw MathError(ErrorKind::ZeroPolynomial, "root isolation of the zero polynomial");
  std::vector<AlgebraicNumber> out;
  if (p.degree() < 1) return out;
  UPoly sqfree = squarefree_part(p);
  std::vector<UPoly> parts = squarefree_decomposition(p);
  Isolation iso = isolate_squarefree(sqfree, parts);
  UPoly def = sqfree.primitive();
  for (std::size_t j = 0; j < iso.boxes.size(); ++j) out.emplace_back(def, iso.boxes[j], iso.multiplicity[j]);
  std::sort(out.begin(), out.end(), display_less);
  return out;
}

std::vector<AlgebraicNumber> isolate_roots(const MultiPoly& p) {
  if (p.is_zero()) throw MathError(ErrorKind::ZeroPolynomial, "root isolation of the zero polynomial");
  for (int k = 0; k < kNumVars; ++k)
    if (p.depends_on(static_cast<Var>(k))) return isolate_roots(p.to_upoly(static_cast<Var>(k)));
  return {};
}

AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& width) {
  if (sgn(width) <= 0) throw MathError(ErrorKind::Internal, "refinement width must be positive");
  if (a.box().width() <= width) return a;
  const UPoly& p = a.defining();
  Rational r = floor_power_of_two(width / 2);
  if (r >= a.box().radius) r = a.box().radius / 2;
  std::vector<const UPoly*> polys{&p};
  auto accept = [&](const ComplexRational& z) -> std::optional<AlgebraicNumber> {
    ComplexBox b{z, r};
    if (a.box().contains(b) && isolates(polys, z, r)) return AlgebraicNumber(p, b, a.multiplicity());
    return std::nullopt;
  };

  if (a.is_rational()) {
    if (auto res = accept(ComplexRational(a.rational_value()))) return *res;
  }

  // Exact Newton from the current center with dyadic rounding.
  const UPoly dp = p.derivative();
  int target_bits = 8;
  for (Rational s = r; s < 1; s *= 2) ++target_bits;
  ComplexRational z = a.box().center;
  unsigned bits = 64;
  for (int it = 0; it < 64; ++it) {
    ComplexRational d = dp.eval(z);
    if (d.is_zero()) break;
    ComplexRational step = p.eval(z) / d;
    z = z - step;
    z = {round_dyadic(z.re, bits), round_dyadic(z.im, bits)};
    if (step.norm() * 64 < r * r) break;
    if (bits < static_cast<unsigned>(target_bits) + 64) bits *= 2;
  }
  if (auto res = accept(z)) return *res;

  // Fallback: high-precision simultaneous iteration.
  for (int bits2 = 128; bits2 <= 1 << 15; bits2 *= 2) {
    if (bits2 < target_bits + 32) continue;
    for (const auto& c : approximate_roots(p, bits2)) {
      if (!a.box().contains(c)) continue;
      if (auto res = accept(c)) return *res;
      if (a.is_real()) {
        if (auto res = accept(ComplexRational(c.re))) return *res;
      }
    }
  }
  throw MathError(ErrorKind::Internal, "root refinement did not certify");
}

bool is_root_of(const AlgebraicNumber& a, const UPoly& q) {
  if (q.is_zero()) return true;
  UPoly g = gcd(a.defining(), q);
  if (g.degree() < 1) return false;
  if (g.degree() == a.defining().degree()) return true;
  const Rational w = a.box().radius;
  const Rational threshold = w * Rational(29, 20);
  for (const auto& beta : isolate_roots(g)) {
    AlgebraicNumber fine = refine(beta, w / 25);
    if ((fine.box().center - a.box().center).norm() < threshold * threshold) return true;
  }
  return false;
}

bool equal(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.defining() == b.defining() && a.box().intersects(b.box()) == false) return false;
  if (!is_root_of(a, b.defining())) return false;
  const Rational w = b.box().radius;
  AlgebraicNumber fine = refine(a, w / 25);
  const Rational threshold = w * Rational(29, 20);
  return (fine.box().center - b.box().center).norm() < threshold * threshold;
}

bool member(const AlgebraicNumber& a, const std::vector<AlgebraicNumber>& set) {
  return std::any_of(set.begin(), set.end(), [&](const AlgebraicNumber& b) { return equal(a, b); });
}

int root_multiplicity(const AlgebraicNumber& a, const UPoly& q) {
  if (q.is_zero()) throw MathError(ErrorKind::ZeroPolynomial, "multiplicity in the zero polynomial");
  if (!is_root_of(a, q)) return 0;
  auto parts = squarefree_decomposition(q);
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].degree() >= 1 && is_root_of(a, parts[i])) return static_cast<int>(i) + 1;
  return 0;
}

bool display_less(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  const auto& ca = a.box().center;
  const auto& cb = b.box().center;
  if (ca.re != cb.re) return ca.re < cb.re;
  if (ca.im != cb.im) return ca.im < cb.im;
  return a.defining().degree() < b.defining().degree();
}

}  // namespace rbif
