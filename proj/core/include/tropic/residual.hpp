#pragma once

/**
 * @file residual.hpp
 * @brief Distance from a vector to the linear span of matrix columns.
 *
 * For a matrix A consistent with a nonzero vector d, the residual
 *
 *     Δ = √((A (d⁻A)⁻)⁻ d)
 *
 * equals min over x of ρ(Ax, d), and the minimum is attained at
 * x = Δ (d⁻A)⁻. When d has zero components, A is first made consistent with
 * d by consistify(): every column that meets a zero row of d is cleared
 * outside those rows. Rows of d that are zero then carry no constraint, and
 * A counts as irregular only if one of the remaining rows is zero.
 */

#include <algorithm>
#include <optional>
#include <string>

#include "tropic/errors.hpp"
#include "tropic/linalg.hpp"
#include "tropic/metric.hpp"

namespace tropic {

template <class F>
struct ConsistencyResult {
  Matrix<F> a_hat;
  /// J: columns with a nonzero entry in some zero row of d.
  IndexSet forced_zero_columns;
  /// I: rows where d is zero.
  IndexSet zero_rows_of_d;
};

template <class F>
ConsistencyResult<F> consistify(const Matrix<F>& A, const Vector<F>& d) {
  detail::require_same_size(A.rows(), d.size(), "matrix rows vs vector length");
  if (is_zero_vector(d)) throw ZeroVectorD();

  ConsistencyResult<F> out{A, {}, {}};
  std::vector<bool> zero_row(A.rows(), false);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i].is_zero()) {
      zero_row[i] = true;
      out.zero_rows_of_d.push_back(i);
    }
  }
  for (std::size_t j = 0; j < A.cols(); ++j) {
    bool hits = false;
    for (std::size_t i : out.zero_rows_of_d) {
      if (!A(i, j).is_zero()) {
        hits = true;
        break;
      }
    }
    if (!hits) continue;
    out.forced_zero_columns.push_back(j);
    for (std::size_t i = 0; i < A.rows(); ++i) {
      if (!zero_row[i]) out.a_hat(i, j) = A.field().zero();
    }
  }
  return out;
}

/// True when consistify(A, d) would leave A unchanged.
template <class F>
bool is_consistent(const Matrix<F>& A, const Vector<F>& d) {
  detail::require_same_size(A.rows(), d.size(), "matrix rows vs vector length");
  for (std::size_t j = 0; j < A.cols(); ++j) {
    bool touches_zero_row = false;
    bool touches_other_row = false;
    for (std::size_t i = 0; i < A.rows(); ++i) {
      if (A(i, j).is_zero()) continue;
      (d[i].is_zero() ? touches_zero_row : touches_other_row) = true;
    }
    if (touches_zero_row && touches_other_row) return false;
  }
  return true;
}

namespace detail {

/// The residual for a consistent pair; no validation.
template <class F>
Distance<F> residual_unchecked(const Matrix<F>& A, const Vector<F>& d) {
  const F& f = A.field();
  for (std::size_t i = 0; i < A.rows(); ++i) {
    if (!d[i].is_zero() && A.row_is_zero(i)) return Distance<F>::infinite();
  }
  auto d_conj = pseudo_inverse<F, ColumnTag, RowTag>(d);
  auto x = pseudo_inverse<F, RowTag, ColumnTag>(row_mat(d_conj, A));
  auto y = mat_vec(A, x);
  auto s = row_vec(pseudo_inverse<F, ColumnTag, RowTag>(y), d);
  return Distance<F>::finite(f.sqrt(s));
}

}  // namespace detail

/// Δ_A(d) for A already consistent with d.
template <class F>
Distance<F> residual_delta(const Matrix<F>& A, const Vector<F>& d) {
  detail::require_same_size(A.rows(), d.size(), "matrix rows vs vector length");
  if (is_zero_vector(d)) throw ZeroVectorD();
  if (!is_consistent(A, d)) {
    throw InconsistentInput("matrix is not consistent with the vector; apply consistify first");
  }
  return detail::residual_unchecked(A, d);
}

/// The instance with the zero rows of d and the forced-zero columns removed.
template <class F>
struct ReducedInstance {
  Matrix<F> a;
  Vector<F> d;
  IndexSet rows;  ///< original row of each retained row
  IndexSet cols;  ///< original column of each retained column
};

template <class F>
ReducedInstance<F> reduce_instance(const Matrix<F>& A, const Vector<F>& d) {
  auto c = consistify(A, d);
  ReducedInstance<F> out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!d[i].is_zero()) out.rows.push_back(i);
  }
  for (std::size_t j = 0; j < A.cols(); ++j) {
    if (!std::binary_search(c.forced_zero_columns.begin(), c.forced_zero_columns.end(), j)) {
      out.cols.push_back(j);
    }
  }
  out.a = A.select_rows(out.rows).select_columns(out.cols);
  std::vector<typename F::scalar_type> dv;
  for (std::size_t i : out.rows) dv.push_back(d[i]);
  out.d = Vector<F>(A.field(), std::move(dv));
  return out;
}

template <class F>
struct SpanDistanceResult {
  Distance<F> delta = Distance<F>::infinite();
  std::optional<Vector<F>> minimizer;
  std::optional<Vector<F>> nearest_point;
  IndexSet forced_zero_columns;
  IndexSet zero_rows_of_d;
};

/// ρ(span A, d) together with a minimizer x and the nearest point Ax.
/// A zero d is at distance 𝟙 with minimizer 𝟘; an all-zero A is at
/// distance ∞ from every nonzero d.
template <class F>
SpanDistanceResult<F> distance_to_span(const Matrix<F>& A, const Vector<F>& d) {
  detail::require_same_size(A.rows(), d.size(), "matrix rows vs vector length");
  const F& f = A.field();
  SpanDistanceResult<F> out;

  if (is_zero_vector(d)) {
    out.delta = Distance<F>::finite(f.one());
    out.minimizer = Vector<F>::zero(f, A.cols());
    out.nearest_point = Vector<F>::zero(f, A.rows());
    return out;
  }

  auto c = consistify(A, d);
  out.forced_zero_columns = c.forced_zero_columns;
  out.zero_rows_of_d = c.zero_rows_of_d;
  out.delta = detail::residual_unchecked(c.a_hat, d);
  if (out.delta.is_infinite()) return out;

  auto principal = detail::pseudo_inverse<F, detail::RowTag, detail::ColumnTag>(
      row_mat(detail::pseudo_inverse<F, detail::ColumnTag, detail::RowTag>(d), c.a_hat));
  out.minimizer = scalar_mul(out.delta.value(), principal);
  out.nearest_point = mat_vec(A, *out.minimizer);
  return out;
}

}  // namespace tropic
