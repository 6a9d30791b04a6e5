#include <rbif/bifurcation.hpp>

#include <rbif/elimination.hpp>
#include <rbif/error.hpp>

#include <algorithm>

namespace rbif {

namespace {

void add_value(std::vector<ValueEntry>& b, const AlgebraicNumber& v, const std::string& tag) {
  for (auto& e : b)
    if (equal(e.value, v)) {
      if (std::find(e.tags.begin(), e.tags.end(), tag) == e.tags.end()) e.tags.push_back(tag);
      return;
    }
  b.push_back({v.with_multiplicity(1), {tag}});
}

/// A small integer outside every listed set, for the reverse χ check.
AlgebraicNumber probe_value(const std::vector<std::vector<AlgebraicNumber>>& avoid) {
  for (int k = 2;; ++k)
    for (int s : {k, -k}) {
      AlgebraicNumber v = AlgebraicNumber::from_rational(s);
      if (std::none_of(avoid.begin(), avoid.end(), [&](const auto& set) { return member(v, set); })) return v;
    }
}

}  // namespace

const char* to_string(Relation r) { return r == Relation::Equality ? "equality" : "containment"; }

Membership binfty_membership(const BifurcationReport& r, const AlgebraicNumber& t0, int precision) {
  Membership m{t0, Verdict::Undetermined, "", ""};
  const std::string name = t0.to_string(precision);
  if (member(t0, r.infinity.undetermined)) {
    m.reason = "degree condition fails";
    m.statement = name + ": B∞ undetermined, degree condition fails";
  } else if (member(t0, r.k0) || member(t0, r.k1)) {
    m.reason = member(t0, r.k0) ? "value in K0" : "value in K1";
    m.statement = name + ": B∞ undetermined by q_k criterion";
  } else if (member(t0, r.binfty)) {
    m.verdict = Verdict::Member;
    m.reason = "q_k vanishes";
    m.statement = name + " ∈ B∞";
  } else {
    m.verdict = Verdict::NotMember;
    m.reason = "q_k does not vanish";
    m.statement = name + " ∉ B∞";
  }
  return m;
}

AlgebraicNumber generic_value(const BifurcationReport& r) {
  std::vector<AlgebraicNumber> b;
  for (const auto& e : r.b) b.push_back(e.value);
  return probe_value({b, r.infinity.roots, r.infinity.undetermined});
}

BifurcationReport bifurcation_set(const MultiPoly& f, const MultiPoly& g, const BifurcationOptions& opt) {
  if (f.is_zero() || g.is_zero()) throw MathError(ErrorKind::ZeroOperand, "f and g must be nonzero");
  BifurcationReport r;
  r.f = f;
  r.g = g;
  r.deg_f = f.degree();
  r.deg_g = g.degree();
  MultiPoly common = gcd(f, g);
  if (!common.is_constant()) throw MathError(ErrorKind::CommonFactor, "f and g share the factor " + common.to_string());
  r.coprimality = "gcd(f, g) = 1 (subresultant gcd)";
  const auto name = [&](const AlgebraicNumber& v) { return v.to_string(opt.precision); };

  r.critical = critical_points(f, g);
  r.k0_eliminant = critical_eliminant(r.critical);
  if (r.k0_eliminant.degree() >= 1) r.k0 = isolate_roots(r.k0_eliminant);

  r.milnor_records = indeterminacy_records(f, g);
  r.k1 = jump_values(r.milnor_records, r.k0);
  if (g.is_constant())
    r.flags.push_back("g constant: A(F) = ∅, K1 = ∅");
  else if (std::all_of(r.milnor_records.begin(), r.milnor_records.end(),
                       [](const MilnorRecord& m) { return m.mu_generic == 0 && m.candidates.empty(); }))
    r.flags.push_back("no fiber is singular at a point of A(F): K1 = ∅");

  r.infinity = critical_values_at_infinity(f, g);
  r.degree = r.infinity.degree;
  for (const auto& v : r.infinity.roots) {
    if (member(v, r.k0) || member(v, r.k1))
      r.flags.push_back("t = " + name(v) + ": B∞ undetermined by q_k criterion");
    else
      r.binfty.push_back(v);
  }
  for (const auto& re : r.infinity.reexamined)
    r.flags.push_back("t = " + name(re.value) + ": re-examined with shear lambda = " + re.lambda.get_str() +
                      (re.member ? ", q_k vanishes" : ", q_k does not vanish"));

  if (r.deg_f > r.deg_g) {
    r.relation = Relation::Equality;
    r.flags.push_back("deg f > deg g: B reported as equality");
  } else {
    r.relation = Relation::Containment;
    r.flags.push_back(r.deg_f == r.deg_g ? "deg f = deg g: B reported as containment"
                                         : "deg f < deg g: B reported as containment");
    if (r.deg_f < r.deg_g) r.flags.push_back("deg f < deg g: q_k criterion applied at t ≠ 0 only");
    for (const auto& v : r.infinity.undetermined)
      r.flags.push_back("t = " + name(v) + ": degree condition fails, B∞ undetermined");
  }

  for (const auto& v : r.k0) add_value(r.b, v, "K0");
  for (const auto& v : r.k1) add_value(r.b, v, "K1");
  for (const auto& v : r.binfty) add_value(r.b, v, "Binfty");
  for (const auto& v : r.infinity.undetermined) add_value(r.b, v, "degree-excluded");
  std::sort(r.b.begin(), r.b.end(), [](const ValueEntry& a, const ValueEntry& b) { return display_less(a.value, b.value); });

  if (opt.verify_chi && r.deg_f > r.deg_g) {
    EulerData data(f, g);
    std::vector<AlgebraicNumber> values;
    for (const auto& e : r.b) values.push_back(e.value);
    AlgebraicNumber probe = probe_value({values, r.infinity.roots});
    values.push_back(probe);
    r.chi_table = data.table(values);
    std::vector<AlgebraicNumber> checked = r.binfty;
    checked.push_back(probe);
    for (const auto& v : checked) {
      ChiJump j = chi_jump_test(data, v);
      const bool expected = member(v, r.binfty);
      if ((j.verdict == JumpVerdict::InBinfty) != expected)
        r.flags.push_back("t = " + name(v) + ": χ criterion disagrees with q_k criterion");
      r.chi_checks.emplace_back(v, j);
    }
  } else if (opt.verify_chi) {
    r.flags.push_back("χ cross-check skipped: requires deg f > deg g");
  }

  for (const auto& q : opt.queries) r.queries.push_back(binfty_membership(r, q, opt.precision));
  return r;
}

}  // namespace rbif
