#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force reference computations for small max-plus instances.
 *
 * These routines do not use the residual formula. The grid search evaluates
 * the Chebyshev form of ρ directly on the additive representation, and the
 * generator enumeration decides span membership by classical residuation
 * (x_j = min over rows of d_i − a_ij) followed by a direct product check.
 */

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tropic/errors.hpp"
#include "tropic/linalg.hpp"
#include "tropic/metric.hpp"
#include "tropic/residual.hpp"
#include "tropic/semifield.hpp"

namespace tropic {

/// Search window in the additive representation. Every coordinate ranges
/// over {𝟘} ∪ {lo, lo + step, ..., ≤ hi}.
template <class Rep>
struct GridSpec {
  Rep lo;
  Rep hi;
  Rep step;
  std::size_t dims = 0;
  /// Branch-and-bound pruning; the result is the same as the plain sweep.
  bool prune = true;
  /// Plain sweep: limit on grid points. Pruned sweep: limit on visited nodes.
  std::size_t max_points = 10'000'000;
};

template <class F>
struct GridResult {
  Distance<F> value = Distance<F>::infinite();
  std::optional<Vector<F>> argmin;
  /// True when no grid point beat the closed-form candidate.
  bool candidate_best = false;
  std::size_t visited = 0;
};

namespace oracle_detail {

/// ρ(y, d) in Chebyshev form; nullopt stands for ∞.
template <class Rep>
std::optional<Rep> chebyshev_rho(const std::vector<std::optional<Rep>>& y,
                                 const std::vector<std::optional<Rep>>& d) {
  Rep best = Rep(0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i].has_value() != d[i].has_value()) return std::nullopt;
    if (!y[i]) continue;
    Rep diff = *y[i] - *d[i];
    if (diff < 0) diff = -diff;
    if (best < diff) best = diff;
  }
  return best;
}

template <class F>
class GridSearch {
 public:
  using Rep = typename F::rep_type;
  using Opt = std::optional<Rep>;

  GridSearch(const Matrix<F>& A, const Vector<F>& d, const GridSpec<Rep>& g)
      : m_(A.rows()), n_(A.cols()), spec_(g) {
    a_.resize(m_ * n_);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (!A(i, j).is_zero()) a_[i * n_ + j] = A(i, j).value();
      }
    }
    for (const auto& v : d) d_.push_back(v.is_zero() ? Opt() : Opt(v.value()));
    for (Rep v = g.lo; !(g.hi < v); v = v + g.step) values_.push_back(v);
  }

  std::size_t values_per_dim() const { return values_.size() + 1; }

  /// Seeds the incumbent with an externally supplied point.
  void offer(const std::vector<Opt>& x) {
    auto r = evaluate(x);
    if (better(r, best_)) {
      best_ = r;
      best_x_ = x;
      incumbent_from_grid_ = false;
    }
  }

  void run() {
    std::vector<Opt> x(n_);
    std::vector<Opt> y(m_);
    if (spec_.prune) {
      descend(0, x, y);
    } else {
      sweep(0, x);
    }
  }

  const std::optional<Rep>& best() const { return best_; }
  const std::vector<Opt>& best_x() const { return best_x_; }
  bool has_incumbent() const { return has_incumbent_; }
  bool incumbent_from_grid() const { return incumbent_from_grid_; }
  std::size_t visited() const { return visited_; }

 private:
  // nullopt = ∞; we track whether any point has been seen separately.
  bool better(const std::optional<Rep>& r, const std::optional<Rep>& incumbent) {
    if (!has_incumbent_) {
      has_incumbent_ = true;
      return true;
    }
    if (!r) return false;
    return !incumbent || *r < *incumbent;
  }

  std::optional<Rep> evaluate(const std::vector<Opt>& x) const {
    std::vector<Opt> y(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (!a_[i * n_ + j] || !x[j]) continue;
        Rep v = *a_[i * n_ + j] + *x[j];
        if (!y[i] || *y[i] < v) y[i] = v;
      }
    }
    return chebyshev_rho(y, d_);
  }

  void count_visit() {
    if (++visited_ > spec_.max_points) {
      throw GridTooLarge("grid search visited more than " + std::to_string(spec_.max_points) +
                         " nodes");
    }
  }

  void leaf(const std::vector<Opt>& x) {
    count_visit();
    auto r = evaluate(x);
    if (better(r, best_)) {
      best_ = r;
      best_x_ = x;
      incumbent_from_grid_ = true;
    }
  }

  void sweep(std::size_t j, std::vector<Opt>& x) {
    if (j == n_) {
      leaf(x);
      return;
    }
    x[j] = std::nullopt;
    sweep(j + 1, x);
    for (const Rep& v : values_) {
      x[j] = v;
      sweep(j + 1, x);
    }
  }

  // Lower bound on ρ over all completions of a partial assignment of
  // coordinates [0, j). `caps` bounds every unassigned coordinate from above.
  // Returns nullopt for ∞.
  std::optional<Rep> lower_bound(std::size_t j, const std::vector<Opt>& y,
                                 const std::vector<Opt>& caps) const {
    Rep lb = Rep(0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (!d_[i]) {
        if (y[i]) return std::nullopt;
        continue;
      }
      Opt reach = y[i];
      for (std::size_t k = j; k < n_; ++k) {
        if (!a_[i * n_ + k] || !caps[k]) continue;
        Rep v = *a_[i * n_ + k] + *caps[k];
        if (!reach || *reach < v) reach = v;
      }
      if (!reach) return std::nullopt;
      if (y[i] && lb < *y[i] - *d_[i]) lb = *y[i] - *d_[i];
      if (lb < *d_[i] - *reach) lb = *d_[i] - *reach;
    }
    return lb;
  }

  bool prunable(const std::optional<Rep>& lb) const {
    if (!has_incumbent_) return false;
    if (!best_) return !lb;  // only a finite point can improve on ∞
    return !lb || !(*lb < *best_);
  }

  // Largest grid value for coordinate k that does not by itself push some
  // row above d by the incumbent or more; 𝟘 if the column meets a zero row.
  Opt cap_for(std::size_t k) const {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!d_[i] && a_[i * n_ + k]) return std::nullopt;
    }
    if (values_.empty()) return std::nullopt;
    for (auto it = values_.rbegin(); it != values_.rend(); ++it) {
      bool ok = true;
      if (has_incumbent_ && best_) {
        for (std::size_t i = 0; i < m_ && ok; ++i) {
          if (!d_[i] || !a_[i * n_ + k]) continue;
          if (!(*a_[i * n_ + k] + *it - *d_[i] < *best_)) ok = false;
        }
      }
      if (ok) return *it;
    }
    return std::nullopt;
  }

  void descend(std::size_t j, std::vector<Opt>& x, std::vector<Opt>& y) {
    std::vector<Opt> caps(n_);
    for (std::size_t k = j; k < n_; ++k) caps[k] = cap_for(k);
    count_visit();
    if (prunable(lower_bound(j, y, caps))) return;
    if (j == n_) {
      leaf(x);
      return;
    }

    // Candidates for coordinate j in decreasing order, 𝟘 last. Lowering x_j
    // can only lower every y_i, so once the bound fails from below it fails
    // for all smaller values too.
    std::vector<Opt> candidates;
    if (caps[j]) {
      for (auto it = values_.rbegin(); it != values_.rend(); ++it) {
        if (!(*caps[j] < *it)) candidates.push_back(*it);
      }
    }
    candidates.push_back(std::nullopt);

    for (const Opt& v : candidates) {
      x[j] = v;
      std::vector<Opt> next_y = y;
      if (v) {
        for (std::size_t i = 0; i < m_; ++i) {
          if (!a_[i * n_ + j]) continue;
          Rep c = *a_[i * n_ + j] + *v;
          if (!next_y[i] || *next_y[i] < c) next_y[i] = c;
        }
      }
      std::vector<Opt> next_caps = caps;
      next_caps[j] = std::nullopt;
      if (prunable(lower_bound(j + 1, next_y, next_caps))) {
        // The bound only worsens from below as v decreases; stop when the
        // failure is not caused by an upper overshoot.
        if (!overshoots(next_y)) break;
        continue;
      }
      descend(j + 1, x, next_y);
    }
    x[j] = std::nullopt;
  }

  bool overshoots(const std::vector<Opt>& y) const {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!y[i]) continue;
      if (!d_[i]) return true;
      if (has_incumbent_ && best_ && !(*y[i] - *d_[i] < *best_)) return true;
    }
    return false;
  }

  std::size_t m_;
  std::size_t n_;
  GridSpec<Rep> spec_;
  std::vector<Opt> a_;
  std::vector<Opt> d_;
  std::vector<Rep> values_;
  std::optional<Rep> best_;
  std::vector<Opt> best_x_;
  bool has_incumbent_ = false;
  bool incumbent_from_grid_ = false;
  std::size_t visited_ = 0;
};

}  // namespace oracle_detail

/// Minimizes ρ(A x, d) over the grid and the closed-form candidate Δ(d⁻A)⁻.
template <class F>
GridResult<F> grid_min_distance(const Matrix<F>& A, const Vector<F>& d,
                                const GridSpec<typename F::rep_type>& g) {
  if constexpr (!is_max_plus_v<F>) {
    throw NotMaxPlus();
  } else {
    using Rep = typename F::rep_type;
    detail::require_same_size(A.rows(), d.size(), "matrix rows vs vector length");
    detail::require_same_size(A.cols(), g.dims, "grid dimension vs matrix columns");
    if (!(g.lo < g.hi) || !(Rep(0) < g.step)) {
      throw std::invalid_argument("grid needs lo < hi and step > 0");
    }

    oracle_detail::GridSearch<F> search(A, d, g);
    if (!g.prune) {
      double points = 1.0;
      for (std::size_t k = 0; k < g.dims; ++k) points *= static_cast<double>(search.values_per_dim());
      if (points > static_cast<double>(g.max_points)) {
        throw GridTooLarge("grid has " + std::to_string(static_cast<long double>(points)) +
                           " points");
      }
    }

    auto span = distance_to_span(A, d);
    if (span.minimizer) {
      std::vector<std::optional<Rep>> cand;
      for (const auto& v : *span.minimizer) {
        cand.push_back(v.is_zero() ? std::optional<Rep>() : std::optional<Rep>(v.value()));
      }
      search.offer(cand);
    }
    search.run();

    const F& f = A.field();
    GridResult<F> out;
    out.visited = search.visited();
    if (!search.has_incumbent()) return out;
    out.value = search.best() ? Distance<F>::finite(f.make(*search.best()))
                              : Distance<F>::infinite();
    std::vector<typename F::scalar_type> x;
    for (const auto& v : search.best_x()) x.push_back(v ? f.make(*v) : f.zero());
    out.argmin = Vector<F>(f, std::move(x));
    out.candidate_best = span.minimizer.has_value() && !search.incumbent_from_grid();
    return out;
  }
}

/// Span membership by classical residuation: the greatest x with A x ≤ d,
/// then a direct check of A x = d. Works on any nonzero or zero d.
template <class F>
bool in_span_by_residuation(const Matrix<F>& A, const Vector<F>& d) {
  detail::require_same_size(A.rows(), d.size(), "matrix rows vs vector length");
  const F& f = A.field();
  std::vector<typename F::scalar_type> x(A.cols(), f.zero());
  for (std::size_t j = 0; j < A.cols(); ++j) {
    std::optional<typename F::scalar_type> bound;
    for (std::size_t i = 0; i < A.rows(); ++i) {
      if (A(i, j).is_zero()) continue;
      auto q = d[i].is_zero() ? f.zero() : f.div(d[i], A(i, j));
      bound = bound ? f.min(*bound, q) : q;
    }
    x[j] = bound ? *bound : f.zero();
  }
  auto y = mat_vec(A, Vector<F>(f, std::move(x)));
  return equal(y, d);
}

/// All minimal generating subsystems of d among A's columns, by testing
/// every subset and every proper subset. Shortlex order, 0-based indices.
template <class F>
std::vector<IndexSet> enumerate_minimal_generators(const Matrix<F>& A, const Vector<F>& d) {
  const std::size_t n = A.cols();
  if (n > 12) throw std::invalid_argument("generator enumeration is limited to 12 columns");
  const std::uint32_t count = 1U << n;
  std::vector<bool> gen(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    IndexSet cols;
    for (std::size_t b = 0; b < n; ++b) {
      if (mask >> b & 1U) cols.push_back(b);
    }
    gen[mask] = in_span_by_residuation(A.select_columns(cols), d);
  }
  std::vector<IndexSet> out;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    if (!gen[mask]) continue;
    bool minimal = true;
    // Every proper subset, not only the one-element deletions.
    for (std::uint32_t sub = (mask - 1) & mask; mask != 0 && minimal; sub = (sub - 1) & mask) {
      if (gen[sub]) minimal = false;
      if (sub == 0) break;
    }
    if (!minimal) continue;
    IndexSet s;
    for (std::size_t b = 0; b < n; ++b) {
      if (mask >> b & 1U) s.push_back(b);
    }
    // Zero columns never belong to a minimal system.
    bool has_zero_column = false;
    for (std::size_t b : s) has_zero_column = has_zero_column || A.column_is_zero(b);
    if (!has_zero_column) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

/// Deterministic random max-plus instance. Entries are 𝟘 with probability
/// 1 − density, otherwise uniform multiples of 1/denominator in
/// [lo, hi]. Zero columns and a zero right-hand side are redrawn.
template <class F>
std::pair<Matrix<F>, Vector<F>> random_instance(std::uint64_t seed, std::size_t m, std::size_t n,
                                                double density, long lo, long hi,
                                                const F& field = F(), long denominator = 2) {
  static_assert(is_max_plus_v<F>, "random instances are max-plus only");
  if (!(density > 0.0) || density > 1.0) {
    throw std::invalid_argument("density must lie in (0, 1]");
  }
  if (lo > hi || denominator < 1 || m == 0 || n == 0) {
    throw std::invalid_argument("invalid random instance parameters");
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution present(density);
  std::uniform_int_distribution<long> numerator(lo * denominator, hi * denominator);
  auto draw = [&] {
    return present(rng) ? field.from_rational(ratio(numerator(rng), denominator))
                        : field.zero();
  };

  Matrix<F> A(field, m, n);
  for (std::size_t j = 0; j < n; ++j) {
    do {
      for (std::size_t i = 0; i < m; ++i) A(i, j) = draw();
    } while (A.column_is_zero(j));
  }
  Vector<F> d = Vector<F>::zero(field, m);
  do {
    for (std::size_t i = 0; i < m; ++i) d[i] = draw();
  } while (is_zero_vector(d));
  return {std::move(A), std::move(d)};
}

}  // namespace tropic
