#include "cherednik/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cherednik/polynomial.hpp"

namespace cherednik::kernels {

namespace {

// Row i <- (pivot * row_i - row_i[c] * row_k) / previous over columns > c.
void eliminate_row(Matrix& m, std::size_t k, std::size_t i, std::size_t c, const Scalar& pivot,
                   const Scalar& previous) {
  const Scalar factor = m(i, c);
  if (factor.is_zero()) {
    if (!(pivot == previous)) {
      const Scalar scale = pivot / previous;
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        if (!m(i, j).is_zero()) m(i, j) *= scale;
      }
    }
    return;
  }
  for (std::size_t j = c + 1; j < m.cols(); ++j) {
    Scalar v = m(i, j).is_zero() ? Scalar(0) : pivot * m(i, j);
    if (!m(k, j).is_zero()) v -= factor * m(k, j);
    if (!v.is_zero() && !previous.is_one()) v /= previous;
    m(i, j) = std::move(v);
  }
  m(i, c) = Scalar(0);
}

// Locates the next pivot at or below row k starting from column c; returns
// false if the remaining block is zero.
bool find_pivot(Matrix& m, std::size_t k, std::size_t& c) {
  for (; c < m.cols(); ++c) {
    for (std::size_t p = k; p < m.rows(); ++p) {
      if (!m(p, c).is_zero()) {
        m.swap_rows(k, p);
        return true;
      }
    }
  }
  return false;
}

Vector column_of_dunkl(const DunklSystem& system, const Vector& y, const MonomialBasis& source,
                       const MonomialBasis& target, std::size_t j) {
  const Polynomial image = system.apply(y, Polynomial::monomial(source[j], Scalar(1)));
  return target.to_vector(image);
}

std::vector<Exponents> word_basis(std::size_t vars, unsigned degree) { return graded_basis(vars, degree); }

Vector gram_row(const Matrix& previous, const std::vector<Matrix>& dunkl, const MonomialBasis& previous_words,
                const Exponents& word) {
  std::size_t i = 0;
  while (word[i] == 0) ++i;
  Exponents shorter = word;
  --shorter[i];
  return dunkl[i].left_apply(previous.row(previous_words.index(shorter)));
}

}  // namespace

namespace serial {

std::vector<std::size_t> bareiss_forward(Matrix& m) {
  std::vector<std::size_t> pivots;
  Scalar previous(1);
  std::size_t c = 0;
  for (std::size_t k = 0; k < m.rows() && c < m.cols(); ++k, ++c) {
    if (!find_pivot(m, k, c)) break;
    const Scalar pivot = m(k, c);
    for (std::size_t i = k + 1; i < m.rows(); ++i) eliminate_row(m, k, i, c, pivot, previous);
    pivots.push_back(c);
    previous = pivot;
  }
  return pivots;
}

Matrix dunkl_matrix(const DunklSystem& system, const Vector& y, unsigned degree) {
  const MonomialBasis source(system.nvars(), degree);
  const MonomialBasis target(system.nvars(), degree - 1);
  Matrix out(target.size(), source.size());
  for (std::size_t j = 0; j < source.size(); ++j) out.set_column(j, column_of_dunkl(system, y, source, target, j));
  return out;
}

Matrix gram_step(const Matrix& previous, const std::vector<Matrix>& dunkl, unsigned degree) {
  const std::size_t vars = dunkl.size();
  const auto words = word_basis(vars, degree);
  const MonomialBasis previous_words(vars, degree - 1);
  Matrix out(words.size(), dunkl.empty() ? 0 : dunkl.front().cols());
  for (std::size_t r = 0; r < words.size(); ++r) out.set_row(r, gram_row(previous, dunkl, previous_words, words[r]));
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<std::size_t> bareiss_forward(Matrix& m) {
  std::vector<std::size_t> pivots;
  Scalar previous(1);
  std::size_t c = 0;
  for (std::size_t k = 0; k < m.rows() && c < m.cols(); ++k, ++c) {
    if (!find_pivot(m, k, c)) break;
    const Scalar pivot = m(k, c);
    const auto rows = static_cast<std::ptrdiff_t>(m.rows());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(k) + 1; i < rows; ++i) {
      eliminate_row(m, k, static_cast<std::size_t>(i), c, pivot, previous);
    }
    pivots.push_back(c);
    previous = pivot;
  }
  return pivots;
}

Matrix dunkl_matrix(const DunklSystem& system, const Vector& y, unsigned degree) {
  const MonomialBasis source(system.nvars(), degree);
  const MonomialBasis target(system.nvars(), degree - 1);
  Matrix out(target.size(), source.size());
  const auto cols = static_cast<std::ptrdiff_t>(source.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t j = 0; j < cols; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    out.set_column(uj, column_of_dunkl(system, y, source, target, uj));
  }
  return out;
}

Matrix gram_step(const Matrix& previous, const std::vector<Matrix>& dunkl, unsigned degree) {
  const std::size_t vars = dunkl.size();
  const auto words = word_basis(vars, degree);
  const MonomialBasis previous_words(vars, degree - 1);
  Matrix out(words.size(), dunkl.empty() ? 0 : dunkl.front().cols());
  const auto rows = static_cast<std::ptrdiff_t>(words.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    const auto ur = static_cast<std::size_t>(r);
    out.set_row(ur, gram_row(previous, dunkl, previous_words, words[ur]));
  }
  return out;
}

}  // namespace parallel

int available_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace cherednik::kernels
