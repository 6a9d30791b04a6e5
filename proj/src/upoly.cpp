#include <rbif/upoly.hpp>

#include <rbif/error.hpp>

#include <sstream>

namespace rbif {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational abs_upper(const ComplexRational& z) { return abs(z.re) + abs(z.im); }

Rational round_dyadic(const Rational& q, unsigned bits) {
  Integer scale = 1;
  scale <<= bits;
  Rational scaled = q * scale;
  Integer n = scaled.get_num();
  Integer d = scaled.get_den();
  // round half away from zero
  Integer twice = 2 * n + (sgn(n) >= 0 ? d : Integer(-d));
  Integer r;
  mpz_tdiv_q(r.get_mpz_t(), twice.get_mpz_t(), Integer(2 * d).get_mpz_t());
  Rational out(r, scale);
  out.canonicalize();
  return out;
}

UPoly::UPoly(std::initializer_list<Rational> low_to_high) : c_(low_to_high) { trim(); }

UPoly::UPoly(std::vector<Rational> low_to_high) : c_(std::move(low_to_high)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly({c}); }

UPoly UPoly::monomial(const Rational& c, int k) {
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v[static_cast<std::size_t>(k)] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Rational UPoly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a) {
  UPoly r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(v));
}

UPoly operator*(const Rational& s, const UPoly& a) {
  if (sgn(s) == 0) return {};
  UPoly r = a;
  for (auto& c : r.c_) c *= s;
  return r;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly result = constant(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(v));
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ComplexRational UPoly::eval(const ComplexRational& z) const {
  ComplexRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * z;
    acc.re += *it;
  }
  return acc;
}

UPoly UPoly::compose(const UPoly& inner) const {
  UPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return inv * *this;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return {};
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& c : c_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(leading()) < 0) scale = -scale;
  return scale * *this;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (sgn(c) < 0)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw MathError(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  Rational inv = 1 / b.leading();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    Rational q = rem[static_cast<std::size_t>(i)] * inv;
    if (sgn(q) == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

UPoly divide_exact(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw MathError(ErrorKind::Internal, "inexact polynomial division");
  return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a.primitive(), y = b.primitive();
  while (!y.is_zero()) {
    UPoly r = (x % y).primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Bezout xgcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(1), s1;
  UPoly t0, t1 = UPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {inv * r0, inv * s0, inv * t0};
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : UPoly::constant(1);
  return divide_exact(p, gcd(p, p.derivative())).monic();
}

std::vector<UPoly> squarefree_decomposition(const UPoly& p) {
  std::vector<UPoly> out;
  if (p.degree() <= 0) return out;
  UPoly f = p.monic();
  UPoly a = gcd(f, f.derivative());
  UPoly b = divide_exact(f, a);
  UPoly c = divide_exact(f.derivative(), a);
  UPoly d = c - b.derivative();
  while (b.degree() > 0) {
    UPoly g = gcd(b, d);
    out.push_back(g);
    b = divide_exact(b, g);
    c = divide_exact(d, g);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

}  // namespace rbif
