#pragma once

#include <vector>

#include "tropic/linalg.hpp"
#include "tropic/metric.hpp"
#include "tropic/residual.hpp"

namespace tropic {

template <class F>
struct DependenceResult {
  bool dependent = false;
  Distance<F> delta = Distance<F>::infinite();
};

/// d lies in the span of A's columns iff Δ = 𝟙.
template <class F>
DependenceResult<F> is_dependent(const Vector<F>& d, const Matrix<F>& A) {
  auto r = distance_to_span(A, d);
  return {is_unit(A.field(), r.delta), r.delta};
}

/// δ(A): the least residual of a column against the remaining ones.
template <class F>
Distance<F> delta_independence(const Matrix<F>& A) {
  if (A.cols() < 2) throw SingleColumn();
  const F& f = A.field();
  auto best = Distance<F>::infinite();
  for (std::size_t i = 0; i < A.cols(); ++i) {
    auto r = distance_to_span(A.without_column(i), A.column(i));
    best = distance_min(f, best, r.delta);
  }
  return best;
}

/// δ(A) > 𝟙. A single column is independent.
template <class F>
bool is_independent(const Matrix<F>& A) {
  if (A.cols() < 2) return true;
  return !is_unit(A.field(), delta_independence(A));
}

template <class F>
struct ReductionTrace {
  IndexSet kept;
  IndexSet removed;
  /// Residual of column i against the columns still retained at step i.
  std::vector<Distance<F>> step_residuals;
};

/// Sequential elimination: at step i, column i is removed when it lies in the
/// span of every other column not removed so far, visited or not.
template <class F>
ReductionTrace<F> reduce_to_independent(const Matrix<F>& A) {
  ReductionTrace<F> trace;
  std::vector<bool> alive(A.cols(), true);
  for (std::size_t i = 0; i < A.cols(); ++i) {
    IndexSet others;
    for (std::size_t j = 0; j < A.cols(); ++j) {
      if (j != i && alive[j]) others.push_back(j);
    }
    auto r = distance_to_span(A.select_columns(others), A.column(i));
    trace.step_residuals.push_back(r.delta);
    if (is_unit(A.field(), r.delta)) {
      alive[i] = false;
      trace.removed.push_back(i);
    }
  }
  for (std::size_t j = 0; j < A.cols(); ++j) {
    if (alive[j]) trace.kept.push_back(j);
  }
  return trace;
}

/// Every column of each matrix lies in the span of the other's columns.
template <class F>
bool systems_equivalent(const Matrix<F>& A, const Matrix<F>& B) {
  detail::require_same_size(A.rows(), B.rows(), "systems compared in different dimensions");
  for (std::size_t j = 0; j < A.cols(); ++j) {
    if (!is_dependent(A.column(j), B).dependent) return false;
  }
  for (std::size_t j = 0; j < B.cols(); ++j) {
    if (!is_dependent(B.column(j), A).dependent) return false;
  }
  return true;
}

}  // namespace tropic
