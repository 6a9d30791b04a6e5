#include <rbif/local.hpp>

#include <rbif/elimination.hpp>
#include <rbif/error.hpp>
#include <rbif/number_field.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

namespace rbif {

namespace {

const MultiPoly kX = MultiPoly::var(Var::x);
const MultiPoly kY = MultiPoly::var(Var::y);
const MultiPoly kT = MultiPoly::var(Var::t);
const MultiPoly kU = MultiPoly::var(Var::u);
const MultiPoly kZ = MultiPoly::var(Var::z);

/// Shear parameters 0, 1, -1, 2, -2, ...
Rational shear(int k) { return k % 2 == 1 ? Rational((k + 1) / 2) : Rational(-(k / 2)); }

MultiPoly at_origin(const MultiPoly& p) { return p.coeff(Var::x, 0).coeff(Var::y, 0); }
MultiPoly on_x_axis(const MultiPoly& p) { return p.coeff(Var::y, 0); }

/// p / y for p vanishing on y = 0.
MultiPoly drop_y(const MultiPoly& p) {
  MultiPoly out;
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f[static_cast<int>(Var::y)] -= 1;
    out += MultiPoly::term(c, f);
  }
  return out;
}

int xy_degree(const MultiPoly& p) {
  int d = 0;
  for (const auto& [e, c] : p.terms()) d = std::max(d, e[0] + e[1]);
  return d;
}

void record(std::vector<MultiPoly>* trace, const MultiPoly& c) {
  if (trace && c.depends_on(Var::t)) trace->push_back(c);
}

/// Fulton's algorithm at the origin over K = Q[u]/(m), with t (if present)
/// transcendental and fraction-free updates. Every coefficient whose
/// nonvanishing steers the computation is appended to trace.
int fulton(MultiPoly P, MultiPoly Q, const UPoly& m, std::vector<MultiPoly>* trace) {
  const int bound = std::max(1, xy_degree(P)) * std::max(1, xy_degree(Q));
  int total = 0;
  for (;;) {
    if (total > bound) throw MathError(ErrorKind::NonIsolated, "curves share a component through the point");
    MultiPoly p0 = at_origin(P), q0 = at_origin(Q);
    const bool pz = k_is_zero(p0, m), qz = k_is_zero(q0, m);
    if (!pz || !qz) {
      if (!pz && !qz)
        record(trace, p0.depends_on(Var::t) && q0.depends_on(Var::t) ? k_gcd(p0, q0, Var::t, m) : MultiPoly(1));
      else
        record(trace, pz ? q0 : p0);
      return total;
    }
    MultiPoly px = on_x_axis(P), qx = on_x_axis(Q);
    int r = k_degree(px, Var::x, m), s = k_degree(qx, Var::x, m);
    if (r < 0 && s < 0) throw MathError(ErrorKind::NonIsolated, "curves share the component y = 0");
    if (r < 0 || s < 0) {
      if (s < 0) {
        std::swap(P, Q);
        std::swap(px, qx);
        std::swap(r, s);
      }
      const int ord = k_order(qx, Var::x, m);
      record(trace, qx.coeff(Var::x, ord));
      total += ord;
      P = drop_y(P);
      continue;
    }
    if (r > s) {
      std::swap(P, Q);
      std::swap(px, qx);
      std::swap(r, s);
    }
    MultiPoly lp = px.coeff(Var::x, r), lq = qx.coeff(Var::x, s);
    record(trace, lp);
    record(trace, lq);
    Q = (lp * Q - lq * P.shift(Var::x, s - r)).reduce_u(m);
  }
}

}  // namespace

AlgebraicPoint AlgebraicPoint::rational(const Rational& a, const Rational& b) {
  return {UPoly{0, 1}, MultiPoly(a), MultiPoly(b)};
}

AlgebraicPoint AlgebraicPoint::restrict_to(const UPoly& factor) const {
  UPoly f = factor.monic();
  return {f, x.reduce_u(f), y.reduce_u(f)};
}

std::vector<std::array<std::complex<double>, 2>> AlgebraicPoint::approximate() const {
  // Large coordinate coefficients cancel, so refine until the certified
  // enclosures are tight relative to the values.
  Rational width(1, Integer(1) << 60);
  for (;;) {
    auto boxes = enclosures(width);
    bool tight = true;
    for (const auto& b : boxes)
      for (const auto& c : b)
        if (c.radius * (Integer(1) << 50) > std::max(Rational(1), abs_upper(c.center))) tight = false;
    if (tight) {
      std::vector<std::array<std::complex<double>, 2>> out;
      for (const auto& b : boxes) out.push_back({b[0].approx(), b[1].approx()});
      return out;
    }
    width /= Rational(Integer(1) << 64);
  }
}

std::vector<std::array<ComplexBox, 2>> AlgebraicPoint::enclosures(const Rational& width) const {
  std::vector<std::array<ComplexBox, 2>> out;
  UPoly X = x.to_upoly(Var::u), Y = y.to_upoly(Var::u);
  auto enclose = [](const UPoly& p, const ComplexBox& b) {
    // |p(c + d) - p(c)| <= sum_k |p^(k)(c)/k!| (2r)^k for |d| <= sqrt(2) r.
    Rational bound = 0, power = 1, fact = 1;
    UPoly d = p;
    const Rational step = 2 * b.radius;
    for (int k = 1; k <= p.degree(); ++k) {
      d = d.derivative();
      fact *= k;
      power *= step;
      bound += abs_upper(d.eval(b.center)) / fact * power;
    }
    return ComplexBox{p.eval(b.center), bound};
  };
  for (const auto& r : isolate_roots(modulus)) {
    AlgebraicNumber fine = refine(r, width);
    out.push_back({enclose(X, fine.box()), enclose(Y, fine.box())});
  }
  return out;
}

std::string AlgebraicPoint::to_string() const {
  std::ostringstream s;
  s << "(" << x.to_string() << ", " << y.to_string() << ")";
  if (modulus.degree() > 1) s << " where " << modulus.to_string("u") << " = 0";
  return s.str();
}

std::vector<AlgebraicPoint> solve_system(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero() || q.is_zero()) {
    const MultiPoly& other = p.is_zero() ? q : p;
    if (!other.is_zero() && other.is_constant()) return {};
    throw MathError(ErrorKind::PositiveDimensional, "system contains the zero polynomial");
  }
  if (p.is_constant() || q.is_constant()) return {};
  if (!gcd(p, q).is_constant())
    throw MathError(ErrorKind::PositiveDimensional, p.to_string() + " and " + q.to_string() + " share a factor");

  for (int k = 0; k < 64; ++k) {
    const Rational lambda = shear(k);
    std::map<Var, MultiPoly> sub{{Var::y, kU - kX.scale(lambda)}};
    MultiPoly ps = p.substitute(sub), qs = q.substitute(sub);
    UPoly R = resultant(ps, qs, Var::x).to_upoly(Var::u);
    if (R.degree() < 1) return {};
    UPoly m = squarefree_part(R);

    struct Outcome {
      bool ok = true;
      std::optional<AlgebraicPoint> point;
    };
    auto branches = run_split(m, [&](const UPoly& mi) -> Outcome {
      MultiPoly P = ps.reduce_u(mi), Q = qs.reduce_u(mi);
      MultiPoly G = k_gcd(P, Q, Var::x, mi);
      const int j = G.degree(Var::x);
      if (j <= 0) return {};
      MultiPoly c = G.coeff(Var::x, j - 1).scale(Rational(1, j));
      MultiPoly diff = (G - (kX + c).pow(static_cast<unsigned>(j))).reduce_u(mi);
      if (!k_is_zero(diff, mi)) return {false, std::nullopt};
      MultiPoly X = (-c).reduce_u(mi);
      MultiPoly Y = (kU - X.scale(lambda)).reduce_u(mi);
      return {true, AlgebraicPoint{mi, X, Y}};
    });
    bool good = std::all_of(branches.begin(), branches.end(), [](const auto& b) { return b.second.ok; });
    if (!good) continue;
    std::vector<AlgebraicPoint> out;
    for (auto& [mi, o] : branches)
      if (o.point) out.push_back(std::move(*o.point));
    return out;
  }
  throw MathError(ErrorKind::Internal, "no admissible shear found for " + p.to_string() + ", " + q.to_string());
}

MultiPoly translate_to_origin(const MultiPoly& h, const AlgebraicPoint& pt) {
  return h.substitute({{Var::x, kX + pt.x}, {Var::y, kY + pt.y}}).reduce_u(pt.modulus);
}

std::vector<BranchValue> intersection_multiplicities(const MultiPoly& p, const MultiPoly& q,
                                                     const AlgebraicPoint& pt) {
  if (p.is_zero() || q.is_zero()) throw MathError(ErrorKind::NonIsolated, "zero polynomial in intersection");
  MultiPoly common = gcd(p, q);
  auto branches = run_split(pt.modulus, [&](const UPoly& mi) {
    AlgebraicPoint here = pt.restrict_to(mi);
    if (!common.is_constant() && k_is_zero(at_origin(translate_to_origin(common, here)), mi))
      throw MathError(ErrorKind::NonIsolated, "common factor " + common.to_string() + " passes through the point");
    return fulton(translate_to_origin(p, here), translate_to_origin(q, here), mi, nullptr);
  });
  std::vector<BranchValue> out;
  for (auto& [mi, v] : branches) out.push_back({mi, v});
  return out;
}

int intersection_multiplicity(const MultiPoly& p, const MultiPoly& q, const AlgebraicPoint& pt) {
  auto b = intersection_multiplicities(p, q, pt);
  for (const auto& v : b)
    if (v.value != b.front().value)
      throw MathError(ErrorKind::NonUniform, "intersection multiplicity differs between conjugate points");
  return b.front().value;
}

int total_intersection_multiplicity(const MultiPoly& p, const MultiPoly& q, const AlgebraicPoint& pt) {
  int total = 0;
  for (const auto& v : intersection_multiplicities(p, q, pt)) total += v.value * v.modulus.degree();
  return total;
}

int milnor_number(const MultiPoly& h, const AlgebraicPoint& pt) {
  try {
    return intersection_multiplicity(h.derivative(Var::x), h.derivative(Var::y), pt);
  } catch (const MathError& e) {
    if (e.kind() == ErrorKind::NonIsolated)
      throw MathError(ErrorKind::NonIsolatedSingularity, "non-isolated critical point of " + h.to_string());
    throw;
  }
}

UPoly norm_in_t(const MultiPoly& c, const UPoly& m) {
  if (!c.depends_on(Var::u)) return c.pow(static_cast<unsigned>(m.degree())).to_upoly(Var::t);
  return resultant(MultiPoly::from_upoly(m, Var::u), c, Var::u).to_upoly(Var::t);
}

std::vector<Specialization> specialize(const MultiPoly& p, const MultiPoly& q, const UPoly& m, const UPoly& n) {
  const MultiPoly A = MultiPoly::from_upoly(m, Var::z);
  for (int c = 1; c < 64; ++c) {
    // Primitive element w = t + c u, carried by the variable u below; z
    // stands for the old generator.
    MultiPoly B = MultiPoly::from_upoly(n, Var::t).substitute({{Var::t, kU - kZ.scale(c)}});
    UPoly R = resultant(A, B, Var::z).to_upoly(Var::u);
    if (gcd(R, R.derivative()).degree() > 0) continue;
    struct Local {
      int mu;
      MultiPoly T;
    };
    auto branches = run_split(R, [&](const UPoly& rk) -> Local {
      MultiPoly G = k_gcd(A.reduce_u(rk), B.reduce_u(rk), Var::z, rk);
      if (G.degree(Var::z) != 1) throw MathError(ErrorKind::Internal, "composite field does not separate points");
      MultiPoly Z = (-G.coeff(Var::z, 0)).reduce_u(rk);
      MultiPoly T = (kU - Z.scale(c)).reduce_u(rk);
      std::map<Var, MultiPoly> sub{{Var::u, Z}, {Var::t, T}};
      int mu = fulton(p.substitute(sub).reduce_u(rk), q.substitute(sub).reduce_u(rk), rk, nullptr);
      return {mu, T};
    });
    std::vector<Specialization> out;
    for (auto& [rk, loc] : branches) {
      UPoly cp = resultant(MultiPoly::from_upoly(rk, Var::u), kT - loc.T, Var::u).to_upoly(Var::t).monic();
      out.push_back({cp, loc.mu});
    }
    return out;
  }
  throw MathError(ErrorKind::Internal, "no separating primitive element found");
}

std::vector<MilnorRecord> parametric_intersection(const MultiPoly& p, const MultiPoly& q, const AlgebraicPoint& pt) {
  struct Generic {
    int mu;
    std::vector<MultiPoly> trace;
  };
  auto branches = run_split(pt.modulus, [&](const UPoly& mi) -> Generic {
    AlgebraicPoint here = pt.restrict_to(mi);
    std::vector<MultiPoly> trace;
    int mu = fulton(translate_to_origin(p, here), translate_to_origin(q, here), mi, &trace);
    return {mu, trace};
  });

  std::vector<MilnorRecord> out;
  for (auto& [mi, gen] : branches) {
    MilnorRecord rec;
    rec.point = pt.restrict_to(mi);
    rec.mu_generic = gen.mu;
    rec.branch_conditions = gen.trace;
    UPoly cand = UPoly::constant(1);
    for (const auto& c : gen.trace) {
      UPoly nrm = norm_in_t(c, mi);
      if (nrm.is_zero()) throw MathError(ErrorKind::Internal, "branch condition vanishes identically");
      if (nrm.degree() >= 1) cand = squarefree_part(cand * squarefree_part(nrm));
    }
    rec.candidate_poly = cand.degree() >= 1 ? cand.primitive() : UPoly::constant(1);
    if (cand.degree() >= 1) {
      rec.candidates = isolate_roots(cand);
      rec.specializations = specialize(translate_to_origin(p, rec.point), translate_to_origin(q, rec.point), mi, cand);
      for (const auto& s : rec.specializations)
        if (s.mu < rec.mu_generic)
          throw MathError(ErrorKind::Internal, "semicontinuity violated at a specialization");
      for (const auto& t0 : rec.candidates) {
        int best = rec.mu_generic;
        for (const auto& s : rec.specializations)
          if (s.mu > best && is_root_of(t0, s.charpoly)) best = s.mu;
        rec.mu_at.emplace_back(t0, best);
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<MilnorRecord> milnor_parametric(const MultiPoly& f, const MultiPoly& g, const AlgebraicPoint& pt) {
  MultiPoly h = f - kT * g;
  return parametric_intersection(h.derivative(Var::x), h.derivative(Var::y), pt);
}

int MilnorRecord::max_at(const AlgebraicNumber& t0) const {
  for (const auto& [c, mu] : mu_at)
    if (equal(c, t0)) return mu;
  return mu_generic;
}

int MilnorRecord::sum_at(const AlgebraicNumber& t0) const {
  if (candidate_poly.degree() < 1 || !is_root_of(t0, candidate_poly)) return mu_generic * point.count();
  int total = 0, seen = 0;
  for (const auto& s : specializations) {
    int k = root_multiplicity(t0, s.charpoly);
    total += k * s.mu;
    seen += k;
  }
  if (seen != point.count()) throw MathError(ErrorKind::Internal, "conjugate count mismatch at a specialization");
  return total;
}

std::vector<AlgebraicNumber> MilnorRecord::jump_values() const {
  std::vector<AlgebraicNumber> out;
  for (const auto& [c, mu] : mu_at)
    if (mu > mu_generic) out.push_back(c);
  return out;
}

}  // namespace rbif
