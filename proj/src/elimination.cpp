#include <rbif/elimination.hpp>

#include <rbif/error.hpp>

namespace rbif {

namespace {

/// Polynomial in a main variable with multivariate coefficients, low to high.
using Dense = std::vector<MultiPoly>;

void trim(Dense& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int deg(const Dense& a) { return static_cast<int>(a.size()) - 1; }

Dense to_dense(const MultiPoly& p, Var v) {
  Dense d = p.coeffs(v);
  trim(d);
  return d;
}

MultiPoly from_dense(const Dense& d, Var v) { return MultiPoly::from_coeffs(d, v); }

Dense prem(Dense a, const Dense& b) {
  const int db = deg(b);
  if (deg(a) < db) return a;
  int e = deg(a) - db + 1;
  const MultiPoly& lb = b.back();
  while (!a.empty() && deg(a) >= db) {
    MultiPoly la = a.back();
    int shift = deg(a) - db;
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(shift + j)] -= la * b[static_cast<std::size_t>(j)];
    trim(a);
    --e;
  }
  if (e > 0) {
    MultiPoly f = lb.pow(static_cast<unsigned>(e));
    for (auto& c : a) c *= f;
  }
  return a;
}

Dense div_scalar(const Dense& a, const MultiPoly& s) {
  Dense r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(divide_exact(c, s));
  return r;
}

/// The variable of largest index present in p or q, or -1.
int main_var(const MultiPoly& p, const MultiPoly& q) {
  for (int k = kNumVars - 1; k >= 0; --k) {
    Var v = static_cast<Var>(k);
    if (p.depends_on(v) || q.depends_on(v)) return k;
  }
  return -1;
}

MultiPoly normalize(const MultiPoly& g) {
  if (g.is_zero()) return g;
  if (g.is_constant()) return MultiPoly(1);
  return g.primitive();
}

MultiPoly gcd_impl(const MultiPoly& p, const MultiPoly& q, int v);

MultiPoly content_impl(const MultiPoly& p, Var v) {
  MultiPoly c;
  for (const auto& coef : p.coeffs(v)) {
    if (coef.is_zero()) continue;
    c = c.is_zero() ? normalize(coef) : gcd_impl(c, coef, main_var(c, coef));
    if (c.is_constant()) return MultiPoly(1);
  }
  return c;
}

MultiPoly gcd_impl(const MultiPoly& p, const MultiPoly& q, int vi) {
  if (p.is_zero()) return normalize(q);
  if (q.is_zero()) return normalize(p);
  if (vi < 0) return MultiPoly(1);
  const Var v = static_cast<Var>(vi);
  MultiPoly cp = content_impl(p, v), cq = content_impl(q, v);
  MultiPoly c = gcd_impl(cp, cq, main_var(cp, cq));
  MultiPoly a = divide_exact(p, cp), b = divide_exact(q, cq);
  if (!a.depends_on(v) || !b.depends_on(v)) return normalize(c);
  Dense A = to_dense(a, v), B = to_dense(b, v);
  if (deg(A) < deg(B)) std::swap(A, B);
  MultiPoly g(1), h(1);
  for (;;) {
    const int delta = deg(A) - deg(B);
    Dense R = prem(A, B);
    if (R.empty()) break;
    if (deg(R) == 0) return normalize(c);
    A = std::move(B);
    B = div_scalar(R, g * h.pow(static_cast<unsigned>(delta)));
    g = A.back();
    if (delta > 0) h = divide_exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
  }
  MultiPoly last = from_dense(B, v);
  return normalize(c * divide_exact(last, content_impl(last, v)));
}

}  // namespace

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, Var v) {
  if (b.is_zero()) throw MathError(ErrorKind::ZeroOperand, "pseudo-remainder by zero");
  return from_dense(prem(to_dense(a, v), to_dense(b, v)), v);
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, Var v) {
  if (p.is_zero() || q.is_zero()) throw MathError(ErrorKind::ZeroOperand, "resultant of a zero polynomial");
  Dense A = to_dense(p, v), B = to_dense(q, v);
  int s = 1;
  if (deg(A) < deg(B)) {
    std::swap(A, B);
    if (deg(A) % 2 == 1 && deg(B) % 2 == 1) s = -1;
  }
  MultiPoly g(1), h(1);
  while (deg(B) > 0) {
    const int delta = deg(A) - deg(B);
    if (deg(A) % 2 == 1 && deg(B) % 2 == 1) s = -s;
    Dense R = prem(A, B);
    if (R.empty()) return MultiPoly();
    A = std::move(B);
    B = div_scalar(R, g * h.pow(static_cast<unsigned>(delta)));
    g = A.back();
    if (delta > 0) h = divide_exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
  }
  const int da = deg(A);
  MultiPoly r = B.back().pow(static_cast<unsigned>(da));
  if (da > 1) r = divide_exact(r, h.pow(static_cast<unsigned>(da - 1)));
  return s < 0 ? -r : r;
}

Discriminant discriminant(const MultiPoly& p, Var v) {
  const int n = p.degree(v);
  if (n < 1)
    throw MathError(ErrorKind::ConstantInVariable,
                    "discriminant of " + p.to_string() + " with respect to absent variable " + var_name(v));
  MultiPoly r = resultant(p, p.derivative(v), v);
  MultiPoly d = divide_exact(r, p.leading_coeff(v));
  if ((n * (n - 1) / 2) % 2 == 1) d = -d;
  return {d, v, "classical"};
}

std::vector<MultiPoly> subresultant_prs(const MultiPoly& p, const MultiPoly& q, Var v) {
  std::vector<MultiPoly> out{p, q};
  Dense A = to_dense(p, v), B = to_dense(q, v);
  if (A.empty() || B.empty()) return out;
  if (deg(A) < deg(B)) std::swap(A, B);
  MultiPoly g(1), h(1);
  while (deg(B) > 0) {
    const int delta = deg(A) - deg(B);
    Dense R = prem(A, B);
    if (R.empty()) break;
    A = std::move(B);
    B = div_scalar(R, g * h.pow(static_cast<unsigned>(delta)));
    out.push_back(from_dense(B, v));
    g = A.back();
    if (delta > 0) h = divide_exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
  }
  return out;
}

MultiPoly gcd(const MultiPoly& p, const MultiPoly& q) { return gcd_impl(p, q, main_var(p, q)); }

MultiPoly gcd(const MultiPoly& p, const MultiPoly& q, Var v) {
  if (!p.depends_on(v) && !q.depends_on(v)) return gcd(p, q);
  return gcd_impl(p, q, static_cast<int>(v));
}

MultiPoly content(const MultiPoly& p, Var v) {
  if (p.is_zero()) return p;
  return content_impl(p, v);
}

MultiPoly primitive_part(const MultiPoly& p, Var v) {
  if (p.is_zero()) return p;
  return divide_exact(p, content_impl(p, v)).primitive();
}

MultiPoly squarefree_part(const MultiPoly& p, Var v) {
  if (p.is_zero()) return p;
  if (!p.depends_on(v)) return normalize(p);
  return divide_exact(p, gcd(p, p.derivative(v), v)).primitive();
}

}  // namespace rbif
