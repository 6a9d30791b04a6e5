#pragma once

#include <rbif/multipoly.hpp>
#include <rbif/upoly.hpp>

#include <exception>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

namespace rbif {

/// Raised when a computation over Q[u]/(m) meets a zero divisor. The two
/// factors are monic, coprime, nonconstant and multiply to m.
class SplitRequired : public std::exception {
 public:
  SplitRequired(UPoly first, UPoly second) : first_(std::move(first)), second_(std::move(second)) {}
  const UPoly& first() const { return first_; }
  const UPoly& second() const { return second_; }
  const char* what() const noexcept override { return "number field modulus splits"; }

 private:
  UPoly first_, second_;
};

/// The product of fields Q[u]/(m) for a monic squarefree m.
class NumberField {
 public:
  /// Makes m monic; throws ZeroPolynomial for m constant.
  explicit NumberField(const UPoly& m);
  const UPoly& modulus() const { return *m_; }
  int degree() const { return m_->degree(); }
  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.m_ == b.m_ || *a.m_ == *b.m_;
  }

 private:
  std::shared_ptr<const UPoly> m_;
};

class NumberFieldElement {
 public:
  NumberFieldElement(NumberField k, const UPoly& value);
  NumberFieldElement(NumberField k, const Rational& c) : NumberFieldElement(std::move(k), UPoly::constant(c)) {}
  static NumberFieldElement generator(NumberField k) { return {std::move(k), UPoly::x()}; }

  const NumberField& field() const { return k_; }
  const UPoly& value() const { return v_; }

  /// Decisive zero test: true, false, or SplitRequired when the value is a
  /// zero divisor.
  bool is_zero() const;
  /// True when the stored representative is the zero polynomial.
  bool is_trivially_zero() const { return v_.is_zero(); }

  friend NumberFieldElement operator+(const NumberFieldElement& a, const NumberFieldElement& b);
  friend NumberFieldElement operator-(const NumberFieldElement& a, const NumberFieldElement& b);
  friend NumberFieldElement operator-(const NumberFieldElement& a);
  friend NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b);
  friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) {
    return a.k_ == b.k_ && a.v_ == b.v_;
  }

 private:
  NumberField k_;
  UPoly v_;
};

/// The two coprime modulus factors found while inverting a zero divisor.
struct Split {
  UPoly first, second;
};

/// Inverse via extended gcd with the modulus, or the split it exposes.
/// Throws DivisionByZero when e is zero.
std::variant<NumberFieldElement, Split> nf_invert(const NumberFieldElement& e);

/// Inverse of v modulo m, throwing SplitRequired on a zero divisor.
UPoly invert_mod(const UPoly& v, const UPoly& m);

/// Runs body(m_i) over the factors m_i of m discovered by SplitRequired,
/// in a deterministic order. The m_i are monic, pairwise coprime and
/// multiply to monic(m).
template <class Body>
auto run_split(const UPoly& m, Body&& body) -> std::vector<std::pair<UPoly, decltype(body(m))>> {
  std::vector<std::pair<UPoly, decltype(body(m))>> out;
  std::vector<UPoly> stack{m.monic()};
  while (!stack.empty()) {
    UPoly cur = std::move(stack.back());
    stack.pop_back();
    try {
      out.emplace_back(cur, body(cur));
    } catch (const SplitRequired& s) {
      stack.push_back(s.second());
      stack.push_back(s.first());
    }
  }
  return out;
}

// Polynomials with coefficients in K = Q[u]/(m) are stored as MultiPoly
// values in which u only occurs to degree < deg m. The helpers below make
// each zero test decisive or throw SplitRequired.

/// Zero test for c, a polynomial in u and possibly other variables, viewed
/// as an element of K[others].
bool k_is_zero(const MultiPoly& c, const UPoly& m);
/// Degree in v over K.
int k_degree(const MultiPoly& p, Var v, const UPoly& m);
/// Lowest exponent of v with a nonzero coefficient over K; -1 for zero.
int k_order(const MultiPoly& p, Var v, const UPoly& m);
/// Drops the coefficients in v that vanish in K above the true degree.
MultiPoly k_trim(const MultiPoly& p, Var v, const UPoly& m);
/// For p in K[v]: monic associate.
MultiPoly k_monic(const MultiPoly& p, Var v, const UPoly& m);
/// For a, b in K[v], b nonzero.
MultiPoly k_rem(const MultiPoly& a, const MultiPoly& b, Var v, const UPoly& m);
/// Monic gcd in K[v].
MultiPoly k_gcd(const MultiPoly& a, const MultiPoly& b, Var v, const UPoly& m);

}  // namespace rbif
