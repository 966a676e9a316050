#pragma once

/**
 * @file linalg.hpp
 * @brief Dense vectors and matrices over an idempotent semifield.
 *
 * Column vectors (Vector) and row vectors (RowVector) are distinct types so
 * that only the products that make sense compile: RowVector x Matrix,
 * RowVector x Vector, Matrix x Vector and Vector x RowVector (outer product).
 * Every container keeps a copy of its semifield, so operations read the
 * tolerance from their operands.
 *
 * Indices are 0-based here; reports and file formats are 1-based.
 */

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tropic/errors.hpp"
#include "tropic/semifield.hpp"

namespace tropic {

using IndexSet = std::vector<std::size_t>;

namespace detail {

template <class F, class Tag>
class Array {
 public:
  using field_type = F;
  using scalar_type = typename F::scalar_type;

  Array() = default;
  Array(F field, std::vector<scalar_type> components)
      : field_(field), components_(std::move(components)) {}

  static Array zero(F field, std::size_t size) {
    return Array(field, std::vector<scalar_type>(size, field.zero()));
  }

  const F& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return components_.size(); }
  bool empty() const noexcept { return components_.empty(); }

  const scalar_type& operator[](std::size_t i) const { return components_[i]; }
  scalar_type& operator[](std::size_t i) { return components_[i]; }

  auto begin() const noexcept { return components_.begin(); }
  auto end() const noexcept { return components_.end(); }

  const std::vector<scalar_type>& components() const noexcept { return components_; }

  /// Exact structural equality.
  friend bool operator==(const Array& a, const Array& b) {
    return a.components_ == b.components_;
  }

 private:
  F field_;
  std::vector<scalar_type> components_;
};

struct ColumnTag {};
struct RowTag {};

inline void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}

}  // namespace detail

template <class F>
using Vector = detail::Array<F, detail::ColumnTag>;

template <class F>
using RowVector = detail::Array<F, detail::RowTag>;

/// Dense row-major m x n matrix.
template <class F>
class Matrix {
 public:
  using field_type = F;
  using scalar_type = typename F::scalar_type;

  Matrix() = default;
  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, field.zero()) {}
  Matrix(F field, std::size_t rows, std::size_t cols, std::vector<scalar_type> entries)
      : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
      throw DimensionMismatch("matrix entry count does not match its shape");
    }
  }

  static Matrix zero(F field, std::size_t rows, std::size_t cols) {
    return Matrix(field, rows, cols);
  }

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  /// Builds a matrix from its rows; all rows must have the same length.
  static Matrix from_rows(F field, const std::vector<std::vector<scalar_type>>& rows) {
    const std::size_t m = rows.size();
    const std::size_t n = m == 0 ? 0 : rows.front().size();
    Matrix out(field, m, n);
    for (std::size_t i = 0; i < m; ++i) {
      detail::require_same_size(rows[i].size(), n, "ragged matrix rows");
      for (std::size_t j = 0; j < n; ++j) out(i, j) = rows[i][j];
    }
    return out;
  }

  static Matrix from_columns(F field, std::size_t rows, const std::vector<Vector<F>>& columns) {
    Matrix out(field, rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      detail::require_same_size(columns[j].size(), rows, "column length");
      for (std::size_t i = 0; i < rows; ++i) out(i, j) = columns[j][i];
    }
    return out;
  }

  const F& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const scalar_type& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  scalar_type& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  Vector<F> column(std::size_t j) const {
    std::vector<scalar_type> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return Vector<F>(field_, std::move(c));
  }

  RowVector<F> row(std::size_t i) const {
    auto first = entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_);
    return RowVector<F>(field_, std::vector<scalar_type>(first, first + static_cast<std::ptrdiff_t>(cols_)));
  }

  /// Submatrix made of the given columns, in the given order.
  Matrix select_columns(std::span<const std::size_t> indices) const {
    Matrix out(field_, rows_, indices.size());
    for (std::size_t k = 0; k < indices.size(); ++k) {
      for (std::size_t i = 0; i < rows_; ++i) out(i, k) = (*this)(i, indices[k]);
    }
    return out;
  }

  Matrix select_rows(std::span<const std::size_t> indices) const {
    Matrix out(field_, indices.size(), cols_);
    for (std::size_t k = 0; k < indices.size(); ++k) {
      for (std::size_t j = 0; j < cols_; ++j) out(k, j) = (*this)(indices[k], j);
    }
    return out;
  }

  /// The matrix with column j deleted.
  Matrix without_column(std::size_t j) const {
    IndexSet keep;
    for (std::size_t k = 0; k < cols_; ++k) {
      if (k != j) keep.push_back(k);
    }
    return select_columns(keep);
  }

  bool column_is_zero(std::size_t j) const {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!(*this)(i, j).is_zero()) return false;
    }
    return true;
  }

  bool row_is_zero(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!(*this)(i, j).is_zero()) return false;
    }
    return true;
  }

  bool is_zero() const {
    for (const auto& e : entries_) {
      if (!e.is_zero()) return false;
    }
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  F field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<scalar_type> entries_;
};

template <class F>
Vector<F> vec_add(const Vector<F>& a, const Vector<F>& b) {
  detail::require_same_size(a.size(), b.size(), "vector addition");
  const F& f = a.field();
  std::vector<typename F::scalar_type> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(f.add(a[i], b[i]));
  return Vector<F>(f, std::move(out));
}

template <class F, class Tag>
detail::Array<F, Tag> scalar_mul(const typename F::scalar_type& x, const detail::Array<F, Tag>& a) {
  const F& f = a.field();
  std::vector<typename F::scalar_type> out;
  out.reserve(a.size());
  for (const auto& v : a) out.push_back(f.mul(x, v));
  return detail::Array<F, Tag>(f, std::move(out));
}

template <class F>
Vector<F> mat_vec(const Matrix<F>& A, const Vector<F>& x) {
  detail::require_same_size(A.cols(), x.size(), "matrix-vector product");
  const F& f = A.field();
  std::vector<typename F::scalar_type> out(A.rows(), f.zero());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) {
      out[i] = f.add(out[i], f.mul(A(i, j), x[j]));
    }
  }
  return Vector<F>(f, std::move(out));
}

template <class F>
RowVector<F> row_mat(const RowVector<F>& r, const Matrix<F>& A) {
  detail::require_same_size(r.size(), A.rows(), "row-vector-matrix product");
  const F& f = A.field();
  std::vector<typename F::scalar_type> out(A.cols(), f.zero());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    if (r[i].is_zero()) continue;
    for (std::size_t j = 0; j < A.cols(); ++j) {
      out[j] = f.add(out[j], f.mul(r[i], A(i, j)));
    }
  }
  return RowVector<F>(f, std::move(out));
}

/// Inner product r x, a scalar.
template <class F>
typename F::scalar_type row_vec(const RowVector<F>& r, const Vector<F>& x) {
  detail::require_same_size(r.size(), x.size(), "row-vector-vector product");
  const F& f = x.field();
  auto acc = f.zero();
  for (std::size_t i = 0; i < r.size(); ++i) acc = f.add(acc, f.mul(r[i], x[i]));
  return acc;
}

/// Outer product x r, an m x n matrix.
template <class F>
Matrix<F> outer(const Vector<F>& x, const RowVector<F>& r) {
  const F& f = x.field();
  Matrix<F> out(f, x.size(), r.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) out(i, j) = f.mul(x[i], r[j]);
  }
  return out;
}

template <class F, class Tag>
bool is_zero_vector(const detail::Array<F, Tag>& v) {
  for (const auto& c : v) {
    if (!c.is_zero()) return false;
  }
  return true;
}

template <class F, class Tag>
IndexSet support(const detail::Array<F, Tag>& v) {
  IndexSet s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) s.push_back(i);
  }
  return s;
}

template <class F, class Tag>
bool is_regular(const detail::Array<F, Tag>& v) {
  for (const auto& c : v) {
    if (c.is_zero()) return false;
  }
  return true;
}

/// A matrix is regular when it has no zero rows.
template <class F>
bool is_regular(const Matrix<F>& A) {
  for (std::size_t i = 0; i < A.rows(); ++i) {
    if (A.row_is_zero(i)) return false;
  }
  return true;
}

namespace detail {

/// Componentwise pseudo-inverse with the bottom element mapped to itself.
/// Defined on the zero vector too; the public conjugate rejects it.
template <class F, class From, class To>
Array<F, To> pseudo_inverse(const Array<F, From>& v) {
  const F& f = v.field();
  std::vector<typename F::scalar_type> out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(c.is_zero() ? f.zero() : f.inv(c));
  return Array<F, To>(f, std::move(out));
}

}  // namespace detail

/// x⁻ for a nonzero column vector x.
template <class F>
RowVector<F> conjugate(const Vector<F>& x) {
  if (is_zero_vector(x)) throw ConjugateOfZeroVector();
  return detail::pseudo_inverse<F, detail::ColumnTag, detail::RowTag>(x);
}

/// r⁻ for a nonzero row vector r; the result is a column vector.
template <class F>
Vector<F> conjugate(const RowVector<F>& r) {
  if (is_zero_vector(r)) throw ConjugateOfZeroVector();
  return detail::pseudo_inverse<F, detail::RowTag, detail::ColumnTag>(r);
}

/// Componentwise a <= b in the semifield order (tolerant for float kinds).
template <class F, class Tag>
bool leq(const detail::Array<F, Tag>& a, const detail::Array<F, Tag>& b) {
  detail::require_same_size(a.size(), b.size(), "vector comparison");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a.field().leq(a[i], b[i])) return false;
  }
  return true;
}

template <class F>
bool leq(const Matrix<F>& A, const Matrix<F>& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) {
    throw DimensionMismatch("matrix comparison");
  }
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) {
      if (!A.field().leq(A(i, j), B(i, j))) return false;
    }
  }
  return true;
}

/// Componentwise equality in the field's sense (tolerant for float kinds).
template <class F, class Tag>
bool equal(const detail::Array<F, Tag>& a, const detail::Array<F, Tag>& b) {
  detail::require_same_size(a.size(), b.size(), "vector comparison");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a.field().eq(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace tropic
