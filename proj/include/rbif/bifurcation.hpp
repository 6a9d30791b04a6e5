#pragma once

#include <rbif/binfty.hpp>
#include <rbif/critical.hpp>
#include <rbif/euler.hpp>
#include <rbif/local.hpp>
#include <rbif/multipoly.hpp>
#include <rbif/roots.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rbif {

/// Whether B equals the reported union or is only contained in it.
enum class Relation { Equality, Containment };
const char* to_string(Relation r);

/// One value of the reported union with the sets it came from:
/// "K0", "K1", "Binfty" or "degree-excluded".
struct ValueEntry {
  AlgebraicNumber value;
  std::vector<std::string> tags;
};

enum class Verdict { Member, NotMember, Undetermined };

/// Membership of one value in B∞ under the q_k criterion.
struct Membership {
  AlgebraicNumber value;
  Verdict verdict = Verdict::Undetermined;
  std::string reason;
  /// e.g. "i ∉ B∞", "0 ∈ B∞", "1: B∞ undetermined by q_k criterion".
  std::string statement;
};

struct BifurcationOptions {
  bool verify_chi = true;
  /// Values whose B∞ membership the report states explicitly.
  std::vector<AlgebraicNumber> queries;
  /// Digits for values quoted in flags and statements.
  int precision = 12;
};

struct BifurcationReport {
  MultiPoly f, g;
  int deg_f = 0, deg_g = 0;
  std::string coprimality;
  DegreeConditionReport degree;

  std::vector<CriticalClass> critical;
  UPoly k0_eliminant;
  std::vector<AlgebraicNumber> k0;

  std::vector<MilnorRecord> milnor_records;
  std::vector<AlgebraicNumber> k1;

  InfinityCriterion infinity;
  /// Roots of q_k outside K0, K1 and the excluded values.
  std::vector<AlgebraicNumber> binfty;

  std::vector<ValueEntry> b;
  Relation relation = Relation::Containment;
  std::vector<std::string> flags;

  std::optional<ChiTable> chi_table;
  std::vector<std::pair<AlgebraicNumber, ChiJump>> chi_checks;
  std::vector<Membership> queries;
};

/// B∞ membership of t0 from a finished report.
Membership binfty_membership(const BifurcationReport& r, const AlgebraicNumber& t0, int precision = 12);

/// The first of 2, -2, 3, -3, ... outside B, the roots of q_k and the
/// excluded values.
AlgebraicNumber generic_value(const BifurcationReport& r);

/// K0, K1 and B∞ with their union. Throws ZeroOperand for f = 0 or g = 0,
/// CommonFactor when gcd(f, g) is not constant, and propagates
/// DegenerateCriticalLocus and PencilNonReduced.
BifurcationReport bifurcation_set(const MultiPoly& f, const MultiPoly& g, const BifurcationOptions& opt = {});

}  // namespace rbif
