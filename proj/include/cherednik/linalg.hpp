#pragma once

// Dense exact linear algebra over Scalar: matrices, fraction-free (Bareiss)
// elimination, kernels, and incrementally maintained subspaces in reduced row
// echelon form.

#include <cstddef>
#include <string>
#include <vector>

#include "cherednik/cyclotomic.hpp"

namespace cherednik {

// Selects the serial reference kernel or its OpenMP counterpart.
enum class Execution { serial, parallel };

using Vector = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  void set_row(std::size_t i, const Vector& values);
  void set_column(std::size_t j, const Vector& values);
  void swap_rows(std::size_t a, std::size_t b);

  bool is_zero() const;
  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  // Row vector times matrix.
  Vector left_apply(const Vector& v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// Row echelon form produced by fraction-free elimination. Rows past rank()
// are zero. Pivot columns are chosen left to right, pivot rows top to bottom,
// so the result is deterministic.
struct EchelonForm {
  Matrix matrix;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

EchelonForm bareiss_echelon(Matrix m, Execution exec = Execution::serial);
std::size_t rank(const Matrix& m, Execution exec = Execution::serial);
// Basis of {v : m v = 0}, one vector per free column with a 1 in that column.
std::vector<Vector> kernel(const Matrix& m, Execution exec = Execution::serial);
Scalar determinant(const Matrix& m);

// Coefficients of det(I + t M), i.e. the elementary symmetric functions of
// the eigenvalues of M (characters of exterior powers when M is a
// representation matrix).
UnivariatePolynomial det_one_plus_t(const Matrix& m);

// Subspace of Scalar^n kept in reduced row echelon form.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
  // The whole ambient space.
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dimension() const { return ambient_; }
  std::size_t dimension() const { return rows_.size(); }
  bool is_full() const { return rows_.size() == ambient_; }

  // Adds v; returns true if the dimension grew.
  bool insert(Vector v);
  // v minus its projection along the pivot columns; zero iff v is contained.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  // Coordinates of a member v in basis(): its entries at the pivot columns.
  Vector coordinates(const Vector& v) const;

  const std::vector<Vector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  // Columns that are not pivots: indices of a basis of the quotient.
  std::vector<std::size_t> free_columns() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> rows_;            // sorted by pivot column
  std::vector<std::size_t> pivots_;
};

}  // namespace cherednik
