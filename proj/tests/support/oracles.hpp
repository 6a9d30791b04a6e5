#pragma once

#include <rbif/error.hpp>
#include <rbif/multipoly.hpp>

#include <utility>
#include <vector>

namespace rbif::oracle {

/// Determinant by fraction-free Bareiss elimination with row pivoting.
inline MultiPoly determinant(std::vector<std::vector<MultiPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly(1);
  MultiPoly prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return MultiPoly();
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

/// Sylvester matrix of p, q in v (highest coefficients first).
inline std::vector<std::vector<MultiPoly>> sylvester(const MultiPoly& p, const MultiPoly& q, Var v) {
  const int m = p.degree(v), n = q.degree(v);
  const int size = m + n;
  std::vector<std::vector<MultiPoly>> s(static_cast<std::size_t>(size),
                                        std::vector<MultiPoly>(static_cast<std::size_t>(size)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[r][static_cast<std::size_t>(r + k)] = p.coeff(v, m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = q.coeff(v, n - k);
  return s;
}

inline MultiPoly sylvester_resultant(const MultiPoly& p, const MultiPoly& q, Var v) {
  if (p.degree(v) + q.degree(v) == 0) return MultiPoly(1);
  return determinant(sylvester(p, q, v));
}

}  // namespace rbif::oracle

namespace rbif::oracle {

/// dim of Q[[x,y]]/(x^a, y^b) style monomial ideals: counts the staircase
/// of monomials x^i y^j outside the ideal generated by the given exponents.
inline int staircase(const std::vector<std::pair<int, int>>& generators, int limit = 64) {
  int count = 0;
  for (int i = 0; i < limit; ++i)
    for (int j = 0; j < limit; ++j) {
      bool inside = false;
      for (const auto& [a, b] : generators)
        if (i >= a && j >= b) inside = true;
      if (!inside) ++count;
    }
  return count;
}

}  // namespace rbif::oracle

#include <rbif/local.hpp>

#include <cmath>

namespace rbif::oracle {

/// Milnor number at the origin by morsification: the number of critical
/// points of h + a x + b y within `radius` of the origin, for tiny a, b.
inline int morse_count(const MultiPoly& h, double radius = 1e-4) {
  const Rational a(1, Integer("1000000000000000000")), b(-3, Integer("2000000000000000000"));
  MultiPoly p = h.derivative(Var::x) + MultiPoly(a), q = h.derivative(Var::y) + MultiPoly(b);
  int n = 0;
  for (const auto& pt : solve_system(p, q))
    for (const auto& c : pt.approximate())
      if (std::abs(c[0]) < radius && std::abs(c[1]) < radius) ++n;
  return n;
}

/// Kouchnirenko's number 2V - a - b + 1 for a convenient Newton polygon
/// given by its vertices from (a, 0) to (0, b).
inline int kouchnirenko(const std::vector<std::pair<int, int>>& vertices) {
  long twice_area = 0;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    twice_area += static_cast<long>(vertices[i].first) * vertices[i + 1].second -
                  static_cast<long>(vertices[i + 1].first) * vertices[i].second;
  const int a = vertices.front().first, b = vertices.back().second;
  return static_cast<int>(twice_area) - a - b + 1;
}

}  // namespace rbif::oracle
