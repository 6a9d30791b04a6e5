#include <rbif/critical.hpp>

#include <rbif/elimination.hpp>
#include <rbif/error.hpp>
#include <rbif/number_field.hpp>

#include <algorithm>
#include <optional>

namespace rbif {

namespace {

const MultiPoly kX = MultiPoly::var(Var::x);
const MultiPoly kY = MultiPoly::var(Var::y);
const MultiPoly kT = MultiPoly::var(Var::t);

/// p evaluated at the point, as a polynomial in u modulo its modulus.
UPoly value_at(const MultiPoly& p, const AlgebraicPoint& pt) {
  MultiPoly v = p.substitute({{Var::x, pt.x}, {Var::y, pt.y}}).reduce_u(pt.modulus);
  return v.is_zero() ? UPoly() : v.to_upoly(Var::u);
}

/// Removes from p every factor it shares with a power of g.
MultiPoly strip_g_factors(MultiPoly p, const MultiPoly& g) {
  if (g.is_constant()) return p;
  for (;;) {
    MultiPoly c = gcd(p, g);
    if (c.is_constant()) return p;
    p = divide_exact(p, c);
  }
}

}  // namespace

std::vector<CriticalClass> critical_points(const MultiPoly& f, const MultiPoly& g) {
  MultiPoly p1 = f.derivative(Var::x) * g - f * g.derivative(Var::x);
  MultiPoly p2 = f.derivative(Var::y) * g - f * g.derivative(Var::y);
  if (p1.is_zero() && p2.is_zero()) throw MathError(ErrorKind::DegenerateCriticalLocus, "F is constant");
  MultiPoly common = gcd(p1, p2);
  MultiPoly kept = strip_g_factors(common, g);
  if (!kept.is_constant())
    throw MathError(ErrorKind::DegenerateCriticalLocus, "critical locus contains the curve " + kept.to_string() + " = 0");
  MultiPoly spurious = divide_exact(common, kept);
  p1 = p1.is_zero() ? p1 : divide_exact(p1, spurious);
  p2 = p2.is_zero() ? p2 : divide_exact(p2, spurious);
  if (p1.is_zero() || p2.is_zero()) {
    const MultiPoly& other = p1.is_zero() ? p2 : p1;
    if (other.is_constant()) return {};
  }

  std::vector<CriticalClass> out;
  for (const AlgebraicPoint& pt : solve_system(p1, p2)) {
    auto branches = run_split(pt.modulus, [&](const UPoly& mi) -> std::optional<UPoly> {
      AlgebraicPoint here = pt.restrict_to(mi);
      UPoly gv = value_at(g, here);
      if (k_is_zero(MultiPoly::from_upoly(gv, Var::u), mi)) return std::nullopt;
      return (value_at(f, here) * invert_mod(gv, mi)) % mi;
    });
    for (const auto& [mi, value] : branches) {
      if (!value) continue;
      AlgebraicPoint here = pt.restrict_to(mi);
      for (const BranchValue& b : intersection_multiplicities(p1, p2, here)) {
        UPoly v = *value % b.modulus;
        UPoly charpoly = norm_in_t(kT - MultiPoly::from_upoly(v, Var::u), b.modulus);
        out.push_back({here.restrict_to(b.modulus), v, charpoly.monic(), b.value});
      }
    }
  }
  return out;
}

UPoly critical_eliminant(const std::vector<CriticalClass>& classes) {
  UPoly e = UPoly::constant(1);
  for (const auto& c : classes) e *= c.charpoly;
  return e.degree() < 1 ? UPoly::constant(1) : squarefree_part(e).monic();
}

std::vector<AlgebraicNumber> critical_values(const MultiPoly& f, const MultiPoly& g) {
  UPoly e = critical_eliminant(critical_points(f, g));
  if (e.degree() < 1) return {};
  return isolate_roots(e);
}

std::vector<MilnorRecord> indeterminacy_records(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_constant()) return {};
  const MultiPoly jac = f.derivative(Var::x) * g.derivative(Var::y) - f.derivative(Var::y) * g.derivative(Var::x);
  std::vector<MilnorRecord> out;
  for (const AlgebraicPoint& pt : solve_system(f, g)) {
    // grad(f - t g) can vanish at p for some t only if grad f and grad g are
    // parallel there.
    auto branches = run_split(pt.modulus, [&](const UPoly& mi) {
      return k_is_zero(MultiPoly::from_upoly(value_at(jac, pt.restrict_to(mi)), Var::u), mi);
    });
    for (const auto& [mi, parallel] : branches) {
      AlgebraicPoint here = pt.restrict_to(mi);
      if (!parallel) {
        MilnorRecord r;
        r.point = here;
        r.candidate_poly = UPoly::constant(1);
        out.push_back(std::move(r));
        continue;
      }
      for (auto& r : milnor_parametric(f, g, here)) out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<AlgebraicNumber> jump_values(const std::vector<MilnorRecord>& records,
                                         const std::vector<AlgebraicNumber>& k0) {
  std::vector<AlgebraicNumber> out;
  for (const auto& r : records)
    for (const auto& v : r.jump_values())
      if (!member(v, k0) && !member(v, out)) out.push_back(v.with_multiplicity(1));
  std::sort(out.begin(), out.end(), display_less);
  return out;
}

MilnorJumps milnor_jump_values(const MultiPoly& f, const MultiPoly& g) {
  MilnorJumps j;
  j.records = indeterminacy_records(f, g);
  bool any = std::any_of(j.records.begin(), j.records.end(), [](const MilnorRecord& r) { return !r.candidates.empty(); });
  if (any) j.values = jump_values(j.records, critical_values(f, g));
  return j;
}

}  // namespace rbif
