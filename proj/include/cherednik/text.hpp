#pragma once

// Canonical text forms for scalars and polynomials, and the parsers used by
// the command line. Cyclotomic scalars are written in the root e of the
// relevant order, e.g. "1/2 - 3/2*e^2"; polynomials as "3/2*x1^2*x2 - x3".

#include <string>
#include <vector>

#include "cherednik/polynomial.hpp"

namespace cherednik {

std::string format_polynomial(const Polynomial& f);

// Sum of terms "a", "a/b", "a*e", "a/b*e^j", "e^j" with signs. Floats are
// rejected. order selects the field of e; order 1 or 2 admit e only as -1 or 1.
Scalar parse_scalar(const std::string& text, int order);
// Comma-separated scalars; empty text gives an empty list.
std::vector<Scalar> parse_scalar_list(const std::string& text, int order);
// Sum of terms "coef*x1^2*x3" over nvars variables with scalar coefficients
// written as above (an irrational coefficient goes in parentheses).
Polynomial parse_polynomial(const std::string& text, std::size_t nvars, int order);

}  // namespace cherednik
