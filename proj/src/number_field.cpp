#include <rbif/number_field.hpp>

#include <rbif/error.hpp>

#include <map>

namespace rbif {

namespace {

/// gcd of m with every u-coefficient polynomial of c.
UPoly gcd_with_modulus(const MultiPoly& c, const UPoly& m) {
  std::map<Exponents, std::vector<Rational>> groups;
  const int ui = static_cast<int>(Var::u);
  for (const auto& [e, coef] : c.terms()) {
    Exponents rest = e;
    rest[ui] = 0;
    auto& v = groups[rest];
    if (static_cast<int>(v.size()) <= e[ui]) v.resize(static_cast<std::size_t>(e[ui] + 1));
    v[static_cast<std::size_t>(e[ui])] = coef;
  }
  UPoly g = m;
  for (auto& [rest, v] : groups) {
    g = gcd(g, UPoly(std::move(v)) % m);
    if (g.degree() == 0) break;
  }
  return g;
}

UPoly reduce(const UPoly& v, const UPoly& m) { return v.degree() < m.degree() ? v : v % m; }

}  // namespace

NumberField::NumberField(const UPoly& m) {
  if (m.degree() < 1) throw MathError(ErrorKind::ZeroPolynomial, "number field modulus must be nonconstant");
  m_ = std::make_shared<const UPoly>(m.monic());
}

NumberFieldElement::NumberFieldElement(NumberField k, const UPoly& value)
    : k_(std::move(k)), v_(reduce(value, k_.modulus())) {}

bool NumberFieldElement::is_zero() const {
  if (v_.is_zero()) return true;
  UPoly g = gcd(v_, k_.modulus());
  if (g.degree() == 0) return false;
  throw SplitRequired(g, divide_exact(k_.modulus(), g));
}

NumberFieldElement operator+(const NumberFieldElement& a, const NumberFieldElement& b) {
  return {a.k_, a.v_ + b.v_};
}
NumberFieldElement operator-(const NumberFieldElement& a, const NumberFieldElement& b) {
  return {a.k_, a.v_ - b.v_};
}
NumberFieldElement operator-(const NumberFieldElement& a) { return {a.k_, -a.v_}; }
NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b) {
  return {a.k_, a.v_ * b.v_};
}

std::variant<NumberFieldElement, Split> nf_invert(const NumberFieldElement& e) {
  if (e.is_trivially_zero()) throw MathError(ErrorKind::DivisionByZero, "inverse of zero in a number field");
  const UPoly& m = e.field().modulus();
  Bezout z = xgcd(e.value(), m);
  if (z.g.degree() > 0) return Split{z.g, divide_exact(m, z.g)};
  return NumberFieldElement(e.field(), z.s);
}

UPoly invert_mod(const UPoly& v, const UPoly& m) {
  UPoly r = reduce(v, m);
  if (r.is_zero()) throw MathError(ErrorKind::DivisionByZero, "inverse of zero in a number field");
  Bezout z = xgcd(r, m);
  if (z.g.degree() > 0) throw SplitRequired(z.g, divide_exact(m, z.g));
  return z.s;
}

bool k_is_zero(const MultiPoly& c, const UPoly& m) {
  if (c.is_zero()) return true;
  UPoly g = gcd_with_modulus(c, m);
  if (g.degree() == 0) return false;
  if (g.degree() == m.degree()) return true;
  throw SplitRequired(g, divide_exact(m, g));
}

int k_degree(const MultiPoly& p, Var v, const UPoly& m) {
  for (int k = p.degree(v); k >= 0; --k)
    if (!k_is_zero(p.coeff(v, k), m)) return k;
  return -1;
}

int k_order(const MultiPoly& p, Var v, const UPoly& m) {
  const int top = p.degree(v);
  for (int k = 0; k <= top; ++k)
    if (!k_is_zero(p.coeff(v, k), m)) return k;
  return -1;
}

MultiPoly k_trim(const MultiPoly& p, Var v, const UPoly& m) {
  auto c = p.coeffs(v);
  const int d = k_degree(p, v, m);
  c.resize(static_cast<std::size_t>(d + 1));
  return MultiPoly::from_coeffs(c, v);
}

MultiPoly k_monic(const MultiPoly& p, Var v, const UPoly& m) {
  MultiPoly q = k_trim(p, v, m);
  if (q.is_zero()) return q;
  UPoly inv = invert_mod(q.leading_coeff(v).to_upoly(Var::u), m);
  return (q * MultiPoly::from_upoly(inv, Var::u)).reduce_u(m);
}

MultiPoly k_rem(const MultiPoly& a, const MultiPoly& b, Var v, const UPoly& m) {
  MultiPoly bm = k_monic(b, v, m);
  if (bm.is_zero()) throw MathError(ErrorKind::DivisionByZero, "remainder by zero over a number field");
  const int db = bm.degree(v);
  MultiPoly r = k_trim(a, v, m);
  while (!r.is_zero() && r.degree(v) >= db) {
    const int dr = r.degree(v);
    r = (r - r.leading_coeff(v) * bm.shift(v, dr - db)).reduce_u(m);
    r = k_trim(r, v, m);
  }
  return r;
}

MultiPoly k_gcd(const MultiPoly& a, const MultiPoly& b, Var v, const UPoly& m) {
  MultiPoly x = k_trim(a, v, m), y = k_trim(b, v, m);
  while (!y.is_zero()) {
    MultiPoly r = k_rem(x, y, v, m);
    x = std::move(y);
    y = std::move(r);
  }
  return k_monic(x, v, m);
}

}  // namespace rbif
