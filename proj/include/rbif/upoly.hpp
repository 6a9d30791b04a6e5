#pragma once

#include <rbif/rational.hpp>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace rbif {

/// Dense univariate polynomial over Q. coeffs()[i] multiplies X^i; no
/// trailing zero coefficients are stored, so the zero polynomial is empty.
class UPoly {
 public:
  UPoly() = default;
  UPoly(std::initializer_list<Rational> low_to_high);
  explicit UPoly(std::vector<Rational> low_to_high);
  static UPoly constant(const Rational& c);
  /// c * X^k
  static UPoly monomial(const Rational& c, int k);
  static UPoly x() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational leading() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& s, const UPoly& a);
  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
  UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly pow(unsigned e) const;
  UPoly derivative() const;
  Rational eval(const Rational& x) const;
  ComplexRational eval(const ComplexRational& z) const;
  /// this(inner(X))
  UPoly compose(const UPoly& inner) const;

  /// Divides by the leading coefficient. Zero stays zero.
  UPoly monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  UPoly primitive() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; b must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly operator%(const UPoly& a, const UPoly& b);
/// Exact quotient; throws if b does not divide a.
UPoly divide_exact(const UPoly& a, const UPoly& b);
/// Monic gcd (zero if both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
/// Extended Euclid: returns (g, s, t) with s*a + t*b = g monic.
struct Bezout {
  UPoly g, s, t;
};
Bezout xgcd(const UPoly& a, const UPoly& b);
/// Monic squarefree part.
UPoly squarefree_part(const UPoly& p);
/// Yun decomposition: p = lc * prod_i factors[i]^(i+1) with monic, pairwise
/// coprime, squarefree factors (some possibly 1).
std::vector<UPoly> squarefree_decomposition(const UPoly& p);

}  // namespace rbif
