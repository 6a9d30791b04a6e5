#pragma once

#include <gmpxx.h>

#include <string>

namespace rbif {

/// Arbitrary-precision rational, always canonical (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);

/// Complex number with exact rational parts.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational r) : re(std::move(r)) {}
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  /// |z|^2, exact.
  Rational norm() const { return re * re + im * im; }
  ComplexRational conj() const { return {re, -im}; }

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
    Rational n = b.norm();
    ComplexRational p = a * b.conj();
    return {p.re / n, p.im / n};
  }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// A rational upper bound for |z|, within a factor of sqrt(2).
Rational abs_upper(const ComplexRational& z);

/// Rounds q to the nearest multiple of 2^-bits.
Rational round_dyadic(const Rational& q, unsigned bits);

}  // namespace rbif
