#include <rbif/euler.hpp>

#include <rbif/elimination.hpp>
#include <rbif/error.hpp>

namespace rbif {

namespace {

const MultiPoly kX = MultiPoly::var(Var::x);
const MultiPoly kY = MultiPoly::var(Var::y);
const MultiPoly kU = MultiPoly::var(Var::u);

void require_strict(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_zero() || g.is_zero()) throw MathError(ErrorKind::ZeroOperand, "zero numerator or denominator");
  if (f.degree() <= g.degree())
    throw MathError(ErrorKind::RequiresStrictDegree, "Euler characteristics need deg f > deg g");
}

}  // namespace

std::string InfinityPoint::to_string() const {
  if (chart == Var::y) return "[0 : 1 : 0]";
  if (point.count() == 1) {
    MultiPoly s = point.x.reduce_u(point.modulus);
    return "[1 : " + s.to_string() + " : 0]";
  }
  return "[1 : u : 0] with " + MultiPoly::from_upoly(point.modulus, Var::u).to_string() + " = 0";
}

std::vector<InfinityPoint> points_at_infinity(const MultiPoly& f, const MultiPoly& g) {
  require_strict(f, g);
  const int d = f.degree(), e = g.degree();
  const MultiPoly fd = f.leading_form();
  const MultiPoly F = homogenize(f, d);
  const MultiPoly G = homogenize(g, e) * MultiPoly::var(Var::z, d - e);
  std::vector<InfinityPoint> out;

  UPoly s = fd.substitute({{Var::x, MultiPoly(1)}}).to_upoly(Var::y);
  if (s.degree() >= 1) {
    UPoly m = squarefree_part(s).monic();
    std::map<Var, MultiPoly> chart{{Var::x, MultiPoly(1)}, {Var::y, kX}, {Var::z, kY}};
    out.push_back({Var::x, AlgebraicPoint{m, kU.reduce_u(m), MultiPoly()}, F.substitute(chart), G.substitute(chart)});
  }
  if (s.degree() < d) {
    std::map<Var, MultiPoly> chart{{Var::y, MultiPoly(1)}, {Var::z, kY}};
    out.push_back({Var::y, AlgebraicPoint::rational(0, 0), F.substitute(chart), G.substitute(chart)});
  }
  return out;
}

int chi_smooth_projective(int d) { return 2 - (d - 1) * (d - 2); }

const ChiRow& ChiTable::generic() const {
  for (const auto& r : rows)
    if (!r.t) return r;
  throw MathError(ErrorKind::Internal, "table has no generic row");
}

const ChiRow& ChiTable::at(const AlgebraicNumber& t0) const {
  for (const auto& r : rows)
    if (r.t && equal(*r.t, t0)) return r;
  throw MathError(ErrorKind::Internal, "table has no row for " + t0.to_string());
}

EulerData::EulerData(const MultiPoly& f, const MultiPoly& g) : d_(f.degree()) {
  require_strict(f, g);
  // A non-reduced fiber makes the critical locus a curve, so this check
  // comes first.
  critical_ = critical_points(f, g);
  infinity_ = points_at_infinity(f, g);
  for (const auto& p : infinity_)
    for (auto& r : milnor_parametric(p.f_chart, p.g_chart, p.point)) infinity_records_.push_back(std::move(r));
  a_records_ = indeterminacy_records(f, g);
  UPoly e = critical_eliminant(critical_);
  if (e.degree() >= 1) k0_ = isolate_roots(e);
  k1_ = jump_values(a_records_, k0_);
}

int EulerData::a_count() const {
  int n = 0;
  for (const auto& r : a_records_) n += r.point.count();
  return n;
}

int EulerData::v_infinity_count() const {
  int n = 0;
  for (const auto& p : infinity_) n += p.count();
  return n;
}

ChiRow EulerData::row(const std::optional<AlgebraicNumber>& t0) const {
  ChiRow r;
  r.t = t0;
  if (!t0) {
    for (const auto& rec : a_records_) r.mu_affine += rec.mu_generic * rec.point.count();
    for (const auto& rec : infinity_records_) r.mu_infinity += rec.mu_generic * rec.point.count();
  } else {
    for (const auto& rec : a_records_) r.mu_affine += rec.sum_at(*t0);
    for (const auto& c : critical_) r.mu_affine += c.mu * root_multiplicity(*t0, c.charpoly);
    for (const auto& rec : infinity_records_) r.mu_infinity += rec.sum_at(*t0);
    r.formula_asserted = !member(*t0, k1_);
  }
  r.chi_projective = chi_smooth_projective(d_) + r.mu_affine + r.mu_infinity;
  r.chi_fiber = r.chi_projective - v_infinity_count() - a_count();
  return r;
}

ChiTable EulerData::table(const std::vector<AlgebraicNumber>& values) const {
  ChiTable t;
  t.d = d_;
  t.chi_smooth_projective = chi_smooth_projective(d_);
  t.v_infinity_count = v_infinity_count();
  t.a_count = a_count();
  t.rows.push_back(row(std::nullopt));
  for (const auto& v : values) t.rows.push_back(row(v));
  return t;
}

ChiRow chi_fiber(const MultiPoly& f, const MultiPoly& g, const std::optional<AlgebraicNumber>& t) {
  return EulerData(f, g).row(t);
}

const char* to_string(JumpVerdict v) { return v == JumpVerdict::InBinfty ? "in_Binfty" : "not_in_Binfty"; }

ChiJump chi_jump_test(const EulerData& data, const AlgebraicNumber& t0) {
  if (member(t0, data.k0()))
    throw MathError(ErrorKind::CriterionInapplicable, t0.to_string() + " is a critical value");
  if (member(t0, data.k1()))
    throw MathError(ErrorKind::CriterionInapplicable, t0.to_string() + " is a Milnor jump value");
  ChiRow gen = data.row(std::nullopt), at = data.row(t0);
  ChiJump j;
  j.chi_generic = gen.chi_fiber;
  j.chi_t0 = at.chi_fiber;
  j.curve_chi_generic = gen.chi_projective - data.v_infinity_count();
  j.curve_chi_t0 = at.chi_projective - data.v_infinity_count();
  const bool fiber_jump = j.chi_t0 > j.chi_generic;
  const bool curve_jump = j.curve_chi_t0 > j.curve_chi_generic;
  if (fiber_jump != curve_jump) throw MathError(ErrorKind::Internal, "fiber and curve criteria disagree");
  j.verdict = fiber_jump ? JumpVerdict::InBinfty : JumpVerdict::NotInBinfty;
  return j;
}

ChiJump chi_jump_test(const MultiPoly& f, const MultiPoly& g, const AlgebraicNumber& t0) {
  return chi_jump_test(EulerData(f, g), t0);
}

}  // namespace rbif
