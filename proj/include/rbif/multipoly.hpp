#pragma once

#include <rbif/rational.hpp>
#include <rbif/upoly.hpp>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace rbif {

/// The fixed variable universe. u is reserved for algebraic extensions.
enum class Var : int { x = 0, y = 1, z = 2, t = 3, u = 4 };
inline constexpr int kNumVars = 5;

const char* var_name(Var v);

using Exponents = std::array<int, kNumVars>;

/// Graded lexicographic order, x > y > z > t > u; sorts larger monomials first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with rational coefficients over {x,y,z,t,u}.
/// Canonical: no zero coefficients are stored; terms iterate in grlex
/// descending order.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, Rational, GrlexGreater>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT: constants convert implicitly
  MultiPoly(int c) : MultiPoly(Rational(c)) {}  // NOLINT
  static MultiPoly var(Var v, int power = 1);
  static MultiPoly term(const Rational& c, const Exponents& e);
  /// Embeds p(X) with X := v.
  static MultiPoly from_upoly(const UPoly& p, Var v);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Total degree; -1 for zero.
  int degree() const;
  /// Degree in v; -1 for zero.
  int degree(Var v) const;
  /// Lowest exponent of v among the terms; -1 for zero.
  int min_degree(Var v) const;
  bool depends_on(Var v) const { return degree(v) > 0; }
  /// Highest-degree homogeneous component (total degree).
  MultiPoly leading_form() const;
  /// Homogeneous component of total degree k.
  MultiPoly homogeneous_part(int k) const;

  /// Coefficient of v^k, as a polynomial in the other variables.
  MultiPoly coeff(Var v, int k) const;
  /// Coefficients in v from degree 0 upward.
  std::vector<MultiPoly> coeffs(Var v) const;
  static MultiPoly from_coeffs(const std::vector<MultiPoly>& c, Var v);
  /// Leading coefficient with respect to v.
  MultiPoly leading_coeff(Var v) const { return coeff(v, degree(v)); }
  /// Leading term coefficient in grlex order.
  Rational leading_coefficient() const;
  const Exponents& leading_exponents() const { return terms_.begin()->first; }

  /// Univariate view; throws if other variables are present.
  UPoly to_upoly(Var v) const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(unsigned e) const;
  MultiPoly derivative(Var v) const;
  MultiPoly scale(const Rational& s) const;
  /// Multiplies by v^k.
  MultiPoly shift(Var v, int k) const;

  /// Simultaneous substitution of variables by polynomials.
  MultiPoly substitute(const std::map<Var, MultiPoly>& bindings) const;
  /// Substitutes a rational value for v.
  MultiPoly evaluate(Var v, const Rational& value) const;
  /// Reduces the u-degree modulo a univariate polynomial m(u).
  MultiPoly reduce_u(const UPoly& modulus) const;

  /// Divides by the grlex leading coefficient (zero stays zero).
  MultiPoly monic() const;
  /// Clears denominators and integer content; positive grlex leading coefficient.
  MultiPoly primitive() const;

  /// Grammar-compatible text, e.g. "-t*x^2+x*y-t+1".
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  Terms terms_;
};

/// Exact quotient a/b, or throws if b does not divide a.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);
/// Returns true and sets q when b divides a.
bool try_divide(const MultiPoly& a, const MultiPoly& b, MultiPoly& q);

/// Homogenizes p in (x, y) to degree d using z.
MultiPoly homogenize(const MultiPoly& p, int d);

}  // namespace rbif
