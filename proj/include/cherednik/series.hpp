#pragma once

// Truncated power series in t with Scalar coefficients, stored as
// coefficient vectors of fixed length (terms t^0 .. t^{N}).

#include <vector>

#include "cherednik/cyclotomic.hpp"

namespace cherednik {

using Series = std::vector<Scalar>;

Series series_from_polynomial(const UnivariatePolynomial& p, unsigned order);
Series series_multiply(const Series& a, const Series& b);
// 1 / p; p must have a nonzero constant term.
Series series_inverse(const UnivariatePolynomial& p, unsigned order);
// p(t^step) as a polynomial.
UnivariatePolynomial substitute_power(const UnivariatePolynomial& p, unsigned step);
// Series shifted by t^offset (offset >= 0), truncated to the same length.
Series series_shift(const Series& a, unsigned offset);

}  // namespace cherednik
