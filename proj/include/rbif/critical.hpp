#pragma once

#include <rbif/local.hpp>
#include <rbif/multipoly.hpp>
#include <rbif/roots.hpp>

#include <vector>

namespace rbif {

/// Conjugate critical points of F = f/g off g = 0 sharing one Milnor number.
struct CriticalClass {
  AlgebraicPoint point;
  /// F at the point, as a polynomial in u reduced modulo point.modulus.
  UPoly value;
  /// Res_u(modulus, t - value): the critical values, one root per conjugate.
  UPoly charpoly;
  /// Milnor number of F - F(p) at each conjugate p.
  int mu = 0;
};

/// The critical locus f_x g - f g_x = f_y g - f g_y = 0 off g = 0.
/// Throws DegenerateCriticalLocus when it is positive-dimensional.
std::vector<CriticalClass> critical_points(const MultiPoly& f, const MultiPoly& g);

/// Squarefree polynomial in t whose roots are the critical values; 1 if none.
UPoly critical_eliminant(const std::vector<CriticalClass>& classes);

/// K0: the values of F at its critical points.
std::vector<AlgebraicNumber> critical_values(const MultiPoly& f, const MultiPoly& g);

/// A(F) = {f = g = 0} with the parametric Milnor data of f - t g at each
/// class. Classes where f - t g is smooth for every t skip the elimination.
std::vector<MilnorRecord> indeterminacy_records(const MultiPoly& f, const MultiPoly& g);

/// Values t0 outside `k0` where some point of A(F) has a Milnor jump.
std::vector<AlgebraicNumber> jump_values(const std::vector<MilnorRecord>& records,
                                         const std::vector<AlgebraicNumber>& k0);

/// K1 together with the records that witness it.
struct MilnorJumps {
  std::vector<AlgebraicNumber> values;
  std::vector<MilnorRecord> records;
};

MilnorJumps milnor_jump_values(const MultiPoly& f, const MultiPoly& g);

}  // namespace rbif
