#pragma once

#include <string>
#include <vector>

#include "netideal/polynomial.hpp"

namespace netideal {

/// Text form of polynomials:
///   poly   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := coefficient | variable ['^' exponent]
/// Coefficients are integers or fractions n/d; variable names are
/// identifiers ([A-Za-z_][A-Za-z0-9_.]*) with optional trailing primes,
/// e.g. a, g1', m2, y1''.
///
/// Ideal files hold one generator per line; blank lines and lines starting
/// with '#' are ignored, except that an optional leading "# vars: x, y, z"
/// header fixes the ring and its variable order.  Without the header the
/// ring is the sorted set of variable names appearing in the file.
struct ParsedIdeal {
  RingPtr ring;
  std::vector<PolyQ> gens;
};

PolyQ parse_poly(const RingPtr& ring, const std::string& text);
ParsedIdeal parse_ideal_text(const std::string& text);

/// Canonical print: terms descending under ord, "a - b + 2*c^2" style.
std::string poly_to_string(const PolyQ& p, const MonomialOrder& ord);
std::string poly_to_string(const PolyFp& p, const MonomialOrder& ord);

/// Collects every identifier token in a polynomial-grammar text (used to
/// infer rings for headerless ideal files).
std::vector<std::string> collect_variables(const std::string& text);

}  // namespace netideal
