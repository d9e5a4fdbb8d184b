#include "cherednik/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "cherednik/errors.hpp"
#include "cherednik/kernels.hpp"

namespace cherednik {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

void Matrix::set_row(std::size_t i, const Vector& values) {
  if (values.size() != cols_) throw PreconditionError("row length mismatch");
  std::copy(values.begin(), values.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
}

void Matrix::set_column(std::size_t j, const Vector& values) {
  if (values.size() != rows_) throw PreconditionError("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = values[i];
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw PreconditionError("matrix-vector dimension mismatch");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!v[j].is_zero() && !(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
    }
  }
  return out;
}

Vector Matrix::left_apply(const Vector& v) const {
  if (v.size() != rows_) throw PreconditionError("vector-matrix dimension mismatch");
  Vector out(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!(*this)(i, j).is_zero()) out[j] += v[i] * (*this)(i, j);
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix product dimension mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix sum dimension mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix difference dimension mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
  }
  os << "]";
  return os.str();
}

EchelonForm bareiss_echelon(Matrix m, Execution exec) {
  EchelonForm out;
  out.pivot_columns = exec == Execution::parallel ? kernels::parallel::bareiss_forward(m)
                                                  : kernels::serial::bareiss_forward(m);
  out.matrix = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m, Execution exec) { return bareiss_echelon(m, exec).rank(); }

std::vector<Vector> kernel(const Matrix& m, Execution exec) {
  const auto ech = bareiss_echelon(m, exec);
  const auto& e = ech.matrix;
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector x(n);
    x[free] = Scalar(1);
    for (std::size_t r = ech.rank(); r-- > 0;) {
      const std::size_t pc = ech.pivot_columns[r];
      Scalar acc;
      for (std::size_t j = pc + 1; j < n; ++j) {
        if (!x[j].is_zero() && !e(r, j).is_zero()) acc += e(r, j) * x[j];
      }
      x[pc] = acc.is_zero() ? Scalar(0) : -acc / e(r, pc);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);
  // Plain Gaussian elimination tracking the pivot product and row swaps.
  Matrix a = m;
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    const Scalar inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const Scalar f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

UnivariatePolynomial det_one_plus_t(const Matrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("characteristic polynomial of a non-square matrix");
  // Faddeev-LeVerrier: char poly det(x I - M) = sum c_k x^k, c_n = 1,
  // then det(I + t M) = sum_i (-1)^i c_{n-i} t^i.
  const std::size_t n = m.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = Scalar(1);
  Matrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = next;
    Matrix am = m * mk;
    Scalar trace;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / Scalar(static_cast<long>(k));
  }
  std::vector<Scalar> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[i] = (i % 2 == 0) ? c[n - i] : -c[n - i];
  return UnivariatePolynomial(std::move(out));
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace out(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vector row(ambient);
    row[i] = Scalar(1);
    out.rows_.push_back(std::move(row));
    out.pivots_.push_back(i);
  }
  return out;
}

bool Subspace::insert(Vector v) {
  if (is_full()) {
    if (v.size() != ambient_) throw PreconditionError("subspace vector has wrong length");
    return false;
  }
  if (v.size() != ambient_) throw PreconditionError("subspace vector has wrong length");
  v = reduce(std::move(v));
  std::size_t pivot = 0;
  while (pivot < ambient_ && v[pivot].is_zero()) ++pivot;
  if (pivot == ambient_) return false;
  const Scalar inv = v[pivot].inverse();
  for (std::size_t j = pivot; j < ambient_; ++j) {
    if (!v[j].is_zero()) v[j] *= inv;
  }
  // Clear the new pivot column from existing rows.
  for (auto& row : rows_) {
    if (row[pivot].is_zero()) continue;
    const Scalar f = row[pivot];
    for (std::size_t j = pivot; j < ambient_; ++j) {
      if (!v[j].is_zero()) row[j] -= f * v[j];
    }
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != ambient_) throw PreconditionError("subspace vector has wrong length");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t pc = pivots_[r];
    if (v[pc].is_zero()) continue;
    const Scalar f = v[pc];
    const auto& row = rows_[r];
    for (std::size_t j = pc; j < ambient_; ++j) {
      if (!row[j].is_zero()) v[j] -= f * row[j];
    }
  }
  return v;
}

bool Subspace::contains(const Vector& v) const {
  const auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector Subspace::coordinates(const Vector& v) const {
  Vector out;
  out.reserve(pivots_.size());
  for (auto pc : pivots_) out.push_back(v[pc]);
  return out;
}

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t r = 0;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (r < pivots_.size() && pivots_[r] == j) {
      ++r;
    } else {
      out.push_back(j);
    }
  }
  return out;
}

}  // namespace cherednik
