#pragma once

#include <rbif/multipoly.hpp>

#include <complex>
#include <memory>
#include <string>
#include <string_view>

namespace rbif {

/// Parses the public input grammar:
///
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*'? factor)*
///   factor := base ('^' uint)?
///   base   := integer ('/' integer)? | 'x' | 'y' | '(' expr ')'
///
/// Whitespace is insignificant. Errors carry a 1-based column.
MultiPoly parse(std::string_view text);

/// Same grammar, but any of x, y, z, t, u is accepted. For tests and fixtures.
MultiPoly parse_internal(std::string_view text);

/// A numeric expression in one parameter s, used for witness curves. Extends
/// the polynomial grammar with division, decimals and the imaginary unit i.
class CurveExpr {
 public:
  struct Node;

  static CurveExpr parse(std::string_view text);
  std::complex<double> operator()(std::complex<double> s) const;
  const std::string& text() const { return text_; }

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace rbif
