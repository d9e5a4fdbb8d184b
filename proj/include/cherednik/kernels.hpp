#pragma once

// Data-parallel kernels. Each exists twice: a plain serial reference in
// kernels::serial and an OpenMP version in kernels::parallel. Both produce
// identical exact results; tests compare them and bench/ times them.

#include <cstddef>
#include <vector>

#include "cherednik/dunkl.hpp"
#include "cherednik/linalg.hpp"

namespace cherednik::kernels {

namespace serial {

// Fraction-free forward elimination in place; returns the pivot columns.
std::vector<std::size_t> bareiss_forward(Matrix& m);

// Columns are T_y applied to each degree-d monomial.
Matrix dunkl_matrix(const DunklSystem& system, const Vector& y, unsigned degree);

// Next Gram matrix from the previous one: row for the word mu is
// previous.row(mu - e_i) * dunkl[i] with i the first index where mu_i > 0.
// Rows are indexed by degree-d monomials in dunkl.size() word variables.
Matrix gram_step(const Matrix& previous, const std::vector<Matrix>& dunkl, unsigned degree);

}  // namespace serial

namespace parallel {

std::vector<std::size_t> bareiss_forward(Matrix& m);
Matrix dunkl_matrix(const DunklSystem& system, const Vector& y, unsigned degree);
Matrix gram_step(const Matrix& previous, const std::vector<Matrix>& dunkl, unsigned degree);

}  // namespace parallel

// Number of OpenMP threads available to the parallel kernels (1 without OpenMP).
int available_threads();

}  // namespace cherednik::kernels
