#include <rbif/binfty.hpp>

#include <rbif/error.hpp>

namespace rbif {

namespace {

const MultiPoly kX = MultiPoly::var(Var::x);
const MultiPoly kY = MultiPoly::var(Var::y);
const MultiPoly kT = MultiPoly::var(Var::t);

Rational shear(int k) { return k % 2 == 1 ? Rational((k + 1) / 2) : Rational(-(k / 2)); }

constexpr int kShearTries = 16;

MultiPoly apply_shear(const MultiPoly& p, const Rational& lambda) {
  if (lambda == 0) return p;
  return p.substitute({{Var::y, kY + kX.scale(lambda)}});
}

std::string describe_shear(const Rational& lambda) {
  if (lambda == 0) return "identity";
  MultiPoly image = kY + kX.scale(lambda);
  return "y -> " + image.to_string();
}

/// Coefficient of x^d in the degree-d part of f - t g, as a polynomial in t.
UPoly top_x_coefficient(const MultiPoly& f, const MultiPoly& g, int d) {
  Exponents e{};
  e[static_cast<int>(Var::x)] = d;
  auto coeff_of = [&](const MultiPoly& p) {
    auto it = p.terms().find(e);
    return it == p.terms().end() ? Rational(0) : it->second;
  };
  return UPoly{coeff_of(f), -coeff_of(g)};
}

bool in_list(const AlgebraicNumber& a, const std::vector<AlgebraicNumber>& s) { return member(a, s); }

struct Raw {
  Discriminant delta;
  UPoly stripped;
  int k;
  UPoly q_k;
};

/// delta = disc_x(f - t g) with content factors of lc_x removed.
Raw discriminant_data(const MultiPoly& f, const MultiPoly& g, int d) {
  MultiPoly h = f - kT * g;
  Discriminant delta = discriminant(h, Var::x);
  if (delta.poly.is_zero()) {
    MultiPoly reduced = squarefree_part(h, Var::x);
    if (reduced.degree(Var::x) >= 1) delta = discriminant(reduced, Var::x);
    if (delta.poly.is_zero()) throw MathError(ErrorKind::PencilNonReduced, "discriminant of " + h.to_string() + " vanishes identically");
  }
  MultiPoly lc = h.coeff(Var::x, d);
  MultiPoly cont = content(delta.poly, Var::y);
  UPoly stripped = UPoly::constant(1);
  for (;;) {
    MultiPoly common = gcd(cont, lc);
    if (common.is_constant()) break;
    delta.poly = divide_exact(delta.poly, common);
    cont = divide_exact(cont, common);
    stripped *= common.to_upoly(Var::t);
  }
  const int k = delta.poly.degree(Var::y);
  UPoly q = delta.poly.coeff(Var::y, k).to_upoly(Var::t);
  return {delta, stripped, k, q};
}

}  // namespace

const char* to_string(DegreeCase c) {
  switch (c) {
    case DegreeCase::FDominates: return "deg f > deg g";
    case DegreeCase::GDominates: return "deg g > deg f";
    case DegreeCase::Equal: return "deg f = deg g";
  }
  return "";
}

DegreeConditionReport check_degree_condition(const MultiPoly& f, const MultiPoly& g,
                                             const std::optional<AlgebraicNumber>& t0) {
  DegreeConditionReport r;
  const int df = f.degree(), dg = g.degree();
  r.d = std::max(df, dg);
  if (df > dg) {
    r.degree_case = DegreeCase::FDominates;
  } else if (dg > df) {
    r.degree_case = DegreeCase::GDominates;
    r.excluded_values.push_back(AlgebraicNumber::from_rational(0));
  } else {
    r.degree_case = DegreeCase::Equal;
    MultiPoly fd = f.leading_form(), gd = g.leading_form();
    Rational c = fd.leading_coefficient() / gd.leading_coefficient();
    if (fd.leading_exponents() == gd.leading_exponents() && fd == gd.scale(c))
      r.excluded_values.push_back(AlgebraicNumber::from_rational(c));
  }
  r.holds_for_all_t = r.excluded_values.empty();
  if (t0) r.holds_at_t0 = !in_list(*t0, r.excluded_values);
  return r;
}

Normalization normalize_x_degree(const MultiPoly& f, const MultiPoly& g, int d,
                                 const std::vector<AlgebraicNumber>& excluded) {
  std::optional<Normalization> fallback;
  for (int k = 0; k < kShearTries; ++k) {
    const Rational lambda = shear(k);
    MultiPoly fs = apply_shear(f, lambda), gs = apply_shear(g, lambda);
    UPoly coef = top_x_coefficient(fs, gs, d);
    if (coef.is_zero()) continue;
    Normalization n{fs, gs, lambda, describe_shear(lambda), coef, {}};
    if (coef.degree() >= 1)
      for (const auto& r : isolate_roots(coef))
        if (!in_list(r, excluded)) n.bad_values.push_back(r.with_multiplicity(1));
    if (n.bad_values.empty()) return n;
    if (!fallback) fallback = n;
  }
  if (!fallback) throw MathError(ErrorKind::Internal, "no shear makes the x-degree maximal");
  return *fallback;
}

InfinityCriterion critical_values_at_infinity(const MultiPoly& f, const MultiPoly& g) {
  InfinityCriterion out;
  out.degree = check_degree_condition(f, g);
  const int d = out.degree.d;
  if (d < 1) throw MathError(ErrorKind::DegreeTooSmall, "pencil of constants");
  out.normalization = normalize_x_degree(f, g, d, out.degree.excluded_values);
  Raw raw = discriminant_data(out.normalization.f, out.normalization.g, d);
  out.delta = raw.delta;
  out.stripped = raw.stripped;
  out.k = raw.k;
  out.q_k = raw.q_k;
  out.undetermined = out.degree.excluded_values;

  if (out.q_k.degree() >= 1)
    for (const auto& r : isolate_roots(out.q_k)) {
      if (in_list(r, out.undetermined) || in_list(r, out.normalization.bad_values)) continue;
      out.roots.push_back(r);
    }

  // Values where the chosen shear drops the x-degree get a shear of their own.
  for (const auto& s : out.normalization.bad_values) {
    if (!s.is_rational()) throw MathError(ErrorKind::Internal, "irrational shear-bad value");
    const Rational t0 = s.rational_value();
    bool decided = false;
    for (int k = 0; k < kShearTries && !decided; ++k) {
      const Rational lambda = shear(k);
      MultiPoly fs = apply_shear(f, lambda), gs = apply_shear(g, lambda);
      if (top_x_coefficient(fs, gs, d).eval(t0) == 0) continue;
      Raw local = discriminant_data(fs, gs, d);
      Reexamination re{s, lambda, local.q_k, local.q_k.eval(t0) == 0};
      if (re.member) {
        int mult = root_multiplicity(s, local.q_k);
        out.roots.push_back(s.with_multiplicity(mult));
      }
      out.reexamined.push_back(re);
      decided = true;
    }
    if (!decided) throw MathError(ErrorKind::Internal, "no shear valid at a re-examined value");
  }
  std::sort(out.roots.begin(), out.roots.end(), display_less);
  return out;
}

}  // namespace rbif
