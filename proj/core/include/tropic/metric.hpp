#pragma once

#include <optional>
#include <utility>

#include "tropic/errors.hpp"
#include "tropic/linalg.hpp"

namespace tropic {

/// Either a finite semifield value or the symbolic infinity, which is
/// greater than every finite value. Not a semifield element.
template <class F>
class Distance {
 public:
  using scalar_type = typename F::scalar_type;

  static Distance infinite() { return Distance(); }
  static Distance finite(scalar_type v) { return Distance(std::move(v)); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }

  const scalar_type& value() const { return *value_; }

  friend bool operator==(const Distance& a, const Distance& b) { return a.value_ == b.value_; }

 private:
  Distance() = default;
  explicit Distance(scalar_type v) : value_(std::move(v)) {}

  std::optional<scalar_type> value_;
};

template <class F>
bool distance_eq(const F& f, const Distance<F>& a, const Distance<F>& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  return f.eq(a.value(), b.value());
}

template <class F>
bool distance_leq(const F& f, const Distance<F>& a, const Distance<F>& b) {
  if (b.is_infinite()) return true;
  if (a.is_infinite()) return false;
  return f.leq(a.value(), b.value());
}

template <class F>
bool distance_lt(const F& f, const Distance<F>& a, const Distance<F>& b) {
  return !distance_leq(f, b, a);
}

template <class F>
const Distance<F>& distance_min(const F& f, const Distance<F>& a, const Distance<F>& b) {
  return distance_leq(f, a, b) ? a : b;
}

/// True when d is Finite(𝟙) under the field's equality policy.
template <class F>
bool is_unit(const F& f, const Distance<F>& d) {
  return d.is_finite() && f.is_one(d.value());
}

/// ρ(a, b): the ⊕-sum of b_i⁻¹a_i ⊕ a_i⁻¹b_i over the common support;
/// infinite when the supports differ and 𝟙 for two zero vectors.
template <class F>
Distance<F> rho(const Vector<F>& a, const Vector<F>& b) {
  detail::require_same_size(a.size(), b.size(), "distance");
  const F& f = a.field();
  auto acc = f.one();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return Distance<F>::infinite();
    if (a[i].is_zero()) continue;
    acc = f.add(acc, f.add(f.div(a[i], b[i]), f.div(b[i], a[i])));
  }
  return Distance<F>::finite(acc);
}

/// max_i |b_i − a_i| for all-finite vectors over a max-plus semifield.
template <class F>
typename F::rep_type chebyshev(const Vector<F>& a, const Vector<F>& b) {
  if constexpr (!is_max_plus_v<F>) {
    throw NotMaxPlus();
  } else {
    detail::require_same_size(a.size(), b.size(), "chebyshev distance");
    if (!is_regular(a) || !is_regular(b)) {
      throw IrregularInput("chebyshev distance needs all-finite vectors");
    }
    using Rep = typename F::rep_type;
    Rep best = Rep(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      Rep diff = b[i].value() - a[i].value();
      if (diff < 0) diff = -diff;
      if (best < diff) best = diff;
    }
    return best;
  }
}

}  // namespace tropic
