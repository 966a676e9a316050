#pragma once

/**
 * @file solver.hpp
 * @brief Solution theory for the equation A x = d.
 *
 * Zero columns of A are split off first: their components are free. For the
 * remaining consistent instance the equation is solvable iff Δ = 𝟙, and then
 * x = (d⁻A)⁻ is the greatest solution. The complete solution set is the
 * union of boxes x_I indexed by the minimal generating subsystems I of d:
 *
 *     x_i = (d⁻a_i)⁻   for i in I,
 *     x_i ≤ (d⁻a_i)⁻   otherwise.
 */

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "tropic/errors.hpp"
#include "tropic/linalg.hpp"
#include "tropic/metric.hpp"
#include "tropic/residual.hpp"

namespace tropic {

enum class Verdict { none, unique, family };

enum class TrivialCase {
  all_solutions,  ///< A = 𝟘 and d = 𝟘
  zero_solution,  ///< d = 𝟘: x = 𝟘 on every nonzero column
  no_solution,    ///< A = 𝟘 and d ≠ 𝟘
};

template <class F>
struct Preprocessed {
  /// A without its zero columns, made consistent with d when d ≠ 𝟘.
  Matrix<F> reduced;
  Vector<F> d;
  /// Original column of each column of `reduced`.
  IndexSet kept_columns;
  /// Zero columns of A; their components take any value.
  IndexSet free_indices;
  /// Original columns whose component is forced to 𝟘 by zero rows of d.
  IndexSet forced_zero;
  std::optional<TrivialCase> trivial;
};

template <class F>
Preprocessed<F> preprocess(const Matrix<F>& A, const Vector<F>& d) {
  detail::require_same_size(A.rows(), d.size(), "matrix rows vs vector length");
  Preprocessed<F> p;
  for (std::size_t j = 0; j < A.cols(); ++j) {
    (A.column_is_zero(j) ? p.free_indices : p.kept_columns).push_back(j);
  }
  p.d = d;
  p.reduced = A.select_columns(p.kept_columns);
  const bool d_zero = is_zero_vector(d);
  if (p.kept_columns.empty()) {
    p.trivial = d_zero ? TrivialCase::all_solutions : TrivialCase::no_solution;
    return p;
  }
  if (d_zero) {
    p.trivial = TrivialCase::zero_solution;
    return p;
  }
  auto c = consistify(p.reduced, d);
  p.reduced = std::move(c.a_hat);
  for (std::size_t j : c.forced_zero_columns) p.forced_zero.push_back(p.kept_columns[j]);
  return p;
}

template <class F>
struct SolutionReport {
  Verdict verdict = Verdict::none;
  Distance<F> residual = Distance<F>::infinite();
  /// (d⁻A)⁻; 𝟘 at free indices. Present iff verdict ≠ none.
  std::optional<Vector<F>> principal;
  /// Δ (d⁻A)⁻; present whenever the residual is finite.
  std::optional<Vector<F>> pseudo;
  IndexSet free_indices;
};

/// Upper bound of a box component; nullopt means unbounded (free component).
template <class F>
using Bound = std::optional<typename F::scalar_type>;

template <class F>
struct BoxSolution {
  using scalar_type = typename F::scalar_type;

  /// Minimal generating system this box is built from.
  IndexSet index_set;
  /// Components with a single admissible value: (d⁻a_i)⁻ for i in the index
  /// set, and 𝟘 for components whose bound is 𝟘.
  std::map<std::size_t, scalar_type> fixed;
  /// Components ranging over [𝟘, bound].
  std::map<std::size_t, Bound<F>> upper_bounds;
  std::size_t dimension = 0;

  bool has_slack() const { return !upper_bounds.empty(); }

  /// Fixed components, 𝟘 elsewhere.
  Vector<F> lower_corner(const F& f) const {
    auto x = Vector<F>::zero(f, dimension);
    for (const auto& [i, v] : fixed) x[i] = v;
    return x;
  }

  /// Fixed components and upper bounds; unbounded components take `free_value`.
  Vector<F> upper_corner(const F& f, const scalar_type& free_value) const {
    auto x = lower_corner(f);
    for (const auto& [i, b] : upper_bounds) x[i] = b ? *b : free_value;
    return x;
  }

  bool contains(const F& f, const Vector<F>& x) const {
    if (x.size() != dimension) return false;
    for (const auto& [i, v] : fixed) {
      if (!f.eq(x[i], v)) return false;
    }
    for (const auto& [i, b] : upper_bounds) {
      if (b && !f.leq(x[i], *b)) return false;
    }
    return true;
  }

  friend bool operator==(const BoxSolution&, const BoxSolution&) = default;
};

template <class F>
struct GeneralSolution {
  std::vector<BoxSolution<F>> family;
  bool complete = true;
};

struct GeneralOptions {
  /// Largest number of columns enumerated exhaustively.
  std::size_t max_cols = 20;
  /// Past the cap, enumerate by increasing subset size until 2^max_cols
  /// subsets were tested and report complete = false instead of throwing.
  bool allow_partial = false;
};

namespace detail {

template <class F>
Vector<F> principal_of(const Matrix<F>& A, const Vector<F>& d) {
  return pseudo_inverse<F, RowTag, ColumnTag>(
      row_mat(pseudo_inverse<F, ColumnTag, RowTag>(d), A));
}

template <class F>
Vector<F> expand(const Vector<F>& local, const IndexSet& cols, std::size_t n) {
  auto x = Vector<F>::zero(local.field(), n);
  for (std::size_t k = 0; k < cols.size(); ++k) x[cols[k]] = local[k];
  return x;
}

/// Generation test d ∈ span{columns of A in `mask`}, over columns `pool`.
template <class F>
class GenerationOracle {
 public:
  GenerationOracle(const Matrix<F>& A, const Vector<F>& d, const IndexSet& pool)
      : A_(A), d_(d), pool_(pool) {}

  bool operator()(std::uint64_t mask) const {
    IndexSet cols;
    for (std::size_t b = 0; b < pool_.size(); ++b) {
      if (mask >> b & 1U) cols.push_back(pool_[b]);
    }
    ++evaluations_;
    return is_unit(A_.field(), residual_unchecked(A_.select_columns(cols), d_));
  }

  std::size_t evaluations() const { return evaluations_; }

 private:
  const Matrix<F>& A_;
  const Vector<F>& d_;
  const IndexSet& pool_;
  mutable std::size_t evaluations_ = 0;
};

inline IndexSet mask_members(std::uint64_t mask) {
  IndexSet out;
  for (std::size_t b = 0; mask != 0; ++b, mask >>= 1) {
    if (mask & 1U) out.push_back(b);
  }
  return out;
}

/// Masks of all minimal generating subsets of a pool of k ≤ 30 columns.
template <class Gen>
std::vector<std::uint64_t> minimal_masks_dense(const Gen& generates, std::size_t k) {
  const std::uint64_t count = std::uint64_t{1} << k;
  std::vector<std::uint8_t> gen(count, 0);
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    // Supersets of generating sets generate.
    gen[mask] = gen[mask & (mask - 1)] || generates(mask);
    if (!gen[mask]) continue;
    bool minimal = true;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      if (gen[mask ^ (rest & (~rest + 1))]) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(mask);
  }
  return out;
}

/// Enumeration by increasing subset size with a budget on generation tests.
/// Returns the minimal masks found and whether every subset was covered.
template <class Gen>
std::pair<std::vector<std::uint64_t>, bool> minimal_masks_budgeted(const Gen& generates,
                                                                   std::size_t k,
                                                                   std::size_t budget) {
  std::unordered_map<std::uint64_t, bool> memo;
  std::size_t spent = 0;
  auto gen = [&](std::uint64_t mask) -> std::optional<bool> {
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    if (spent >= budget) return std::nullopt;
    ++spent;
    bool g = mask != 0 && generates(mask);
    memo.emplace(mask, g);
    return g;
  };
  std::vector<std::uint64_t> out;
  const std::uint64_t limit = k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  for (std::size_t size = 1; size <= k; ++size) {
    std::uint64_t mask = size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
    while (true) {
      auto g = gen(mask);
      if (!g) return {out, false};
      if (*g) {
        bool minimal = true;
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
          auto sub = gen(mask ^ (rest & (~rest + 1)));
          if (!sub) return {out, false};
          if (*sub) {
            minimal = false;
            break;
          }
        }
        if (minimal) out.push_back(mask);
      }
      // Next mask with the same popcount (Gosper's hack).
      const std::uint64_t low = mask & (~mask + 1);
      const std::uint64_t ripple = mask + low;
      if (ripple == 0 || ripple > limit) break;
      mask = ripple | (((mask ^ ripple) >> 2) / low);
      if (mask > limit) break;
    }
  }
  return {out, true};
}

inline bool shortlex_less(const IndexSet& a, const IndexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace detail

/// Existence, principal solution, pseudo-solution and uniqueness verdict.
template <class F>
SolutionReport<F> solve(const Matrix<F>& A, const Vector<F>& d) {
  const F& f = A.field();
  const std::size_t n = A.cols();
  auto p = preprocess(A, d);
  SolutionReport<F> r;
  r.free_indices = p.free_indices;

  if (p.trivial) {
    if (*p.trivial == TrivialCase::no_solution) return r;
    r.residual = Distance<F>::finite(f.one());
    r.principal = Vector<F>::zero(f, n);
    r.pseudo = r.principal;
    r.verdict = p.free_indices.empty() ? Verdict::unique : Verdict::family;
    return r;
  }

  r.residual = detail::residual_unchecked(p.reduced, p.d);
  if (r.residual.is_infinite()) return r;

  auto base = detail::principal_of(p.reduced, p.d);
  r.pseudo = detail::expand(scalar_mul(r.residual.value(), base), p.kept_columns, n);
  if (!is_unit(f, r.residual)) return r;

  r.principal = detail::expand(base, p.kept_columns, n);

  // Unique iff no free components and the columns that are not forced to 𝟘
  // form a minimal generating system: dropping any one of them breaks it.
  bool unique = p.free_indices.empty();
  if (unique) {
    IndexSet active;
    for (std::size_t k = 0; k < base.size(); ++k) {
      if (!base[k].is_zero()) active.push_back(k);
    }
    for (std::size_t drop = 0; drop < active.size() && unique; ++drop) {
      IndexSet rest;
      for (std::size_t k = 0; k < active.size(); ++k) {
        if (k != drop) rest.push_back(active[k]);
      }
      if (is_unit(f, detail::residual_unchecked(p.reduced.select_columns(rest), p.d))) {
        unique = false;
      }
    }
  }
  r.verdict = unique ? Verdict::unique : Verdict::family;
  return r;
}

/// x = Δ (d⁻A)⁻, the vector of the span nearest to d.
template <class F>
Vector<F> pseudo_solve(const Matrix<F>& A, const Vector<F>& d) {
  auto r = solve(A, d);
  if (!r.pseudo) throw InfiniteResidual();
  return *r.pseudo;
}

/// Every solution of A x = d as a family of boxes, one per minimal generating
/// system, in shortlex order of the index sets (size first, then lexicographic).
template <class F>
GeneralSolution<F> general_solution(const Matrix<F>& A, const Vector<F>& d,
                                    const GeneralOptions& options = {}) {
  const F& f = A.field();
  const std::size_t n = A.cols();
  auto p = preprocess(A, d);
  GeneralSolution<F> out;

  auto free_box = [&](BoxSolution<F> box) {
    for (std::size_t j : p.free_indices) box.upper_bounds.emplace(j, std::nullopt);
    return box;
  };

  if (p.trivial) {
    if (*p.trivial == TrivialCase::no_solution) return out;
    BoxSolution<F> box;
    box.dimension = n;
    for (std::size_t j : p.kept_columns) box.fixed.emplace(j, f.zero());
    out.family.push_back(free_box(std::move(box)));
    return out;
  }

  auto base = detail::principal_of(p.reduced, p.d);
  IndexSet pool;  // local columns not forced to 𝟘
  for (std::size_t k = 0; k < base.size(); ++k) {
    if (!base[k].is_zero()) pool.push_back(k);
  }

  detail::GenerationOracle<F> generates(p.reduced, p.d, pool);
  std::vector<std::uint64_t> masks;
  if (pool.size() <= options.max_cols && pool.size() <= 30) {
    masks = detail::minimal_masks_dense(generates, pool.size());
  } else if (options.allow_partial && pool.size() < 64) {
    const std::size_t budget =
        options.max_cols >= 63 ? ~std::size_t{0} : std::size_t{1} << options.max_cols;
    auto [found, complete] = detail::minimal_masks_budgeted(generates, pool.size(), budget);
    masks = std::move(found);
    out.complete = complete;
  } else {
    throw EnumerationCapExceeded(pool.size(), std::min<std::size_t>(options.max_cols, 30));
  }

  for (std::uint64_t mask : masks) {
    BoxSolution<F> box;
    box.dimension = n;
    std::vector<bool> in_set(base.size(), false);
    for (std::size_t b : detail::mask_members(mask)) in_set[pool[b]] = true;
    for (std::size_t k = 0; k < base.size(); ++k) {
      const std::size_t j = p.kept_columns[k];
      if (in_set[k]) {
        box.index_set.push_back(j);
        box.fixed.emplace(j, base[k]);
      } else if (base[k].is_zero()) {
        box.fixed.emplace(j, f.zero());
      } else {
        box.upper_bounds.emplace(j, base[k]);
      }
    }
    out.family.push_back(free_box(std::move(box)));
  }
  std::sort(out.family.begin(), out.family.end(), [](const auto& a, const auto& b) {
    return detail::shortlex_less(a.index_set, b.index_set);
  });
  return out;
}

/// A x = d under the field's equality policy.
template <class F>
bool verify(const Matrix<F>& A, const Vector<F>& d, const Vector<F>& x) {
  detail::require_same_size(A.cols(), x.size(), "matrix columns vs solution length");
  detail::require_same_size(A.rows(), d.size(), "matrix rows vs vector length");
  return equal(mat_vec(A, x), d);
}

}  // namespace tropic
