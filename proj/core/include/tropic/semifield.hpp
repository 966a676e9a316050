#pragma once

/**
 * @file semifield.hpp
 * @brief Linearly ordered radicable idempotent semifields.
 *
 * A semifield is described by a traits type that fixes the representation
 * of the invertible elements together with multiplication, inversion,
 * rational powers and the strict order. The bottom element is never part of
 * the representation: Scalar carries it as a distinguished state, so no
 * arithmetic is ever performed on a sentinel such as -inf.
 *
 * Addition is the maximum with respect to the semifield order, which makes
 * it idempotent by construction. For floating-point kinds equality and the
 * order are tested within a tolerance of max(absolute, relative) form.
 */

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "tropic/errors.hpp"
#include "tropic/rational.hpp"

namespace tropic {

enum class SemifieldKind {
  max_plus_float,
  max_plus_rational,
  min_plus_float,
  max_times_float,
};

/// Canonical tag, e.g. "maxplus-rational".
std::string_view to_string(SemifieldKind kind);

/// Accepts canonical tags and the hyphenated spellings ("max-plus-rational").
/// Throws UnknownSemifield.
SemifieldKind parse_semifield_kind(std::string_view tag);

inline constexpr double kDefaultTolerance = 1e-9;

/// Element of a semifield: either the bottom element or an invertible value.
template <class Rep>
class Scalar {
 public:
  using rep_type = Rep;

  /// The bottom element.
  Scalar() = default;
  explicit Scalar(Rep value) : value_(std::move(value)) {}

  static Scalar zero() { return Scalar(); }

  bool is_zero() const noexcept { return !value_.has_value(); }

  /// Representation of an invertible element; must not be called on zero.
  const Rep& value() const { return *value_; }

  /// Structural (exact) equality. Tolerant comparison goes through the field.
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

 private:
  std::optional<Rep> value_;
};

struct MaxPlusFloatTraits {
  using rep_type = double;
  static constexpr SemifieldKind kind = SemifieldKind::max_plus_float;
  static constexpr bool exact = false;
  static constexpr bool max_plus = true;

  static double one() { return 0.0; }
  static bool before(double a, double b) { return a < b; }
  static double mul(double a, double b) { return a + b; }
  static double inv(double a) { return -a; }
  static double pow(double a, const Rational& q) { return q.get_d() * a; }
  static bool valid(double a) { return std::isfinite(a); }
  static double from_rational(const Rational& q) { return q.get_d(); }
};

struct MaxPlusRationalTraits {
  using rep_type = Rational;
  static constexpr SemifieldKind kind = SemifieldKind::max_plus_rational;
  static constexpr bool exact = true;
  static constexpr bool max_plus = true;

  static Rational one() { return Rational(0); }
  static bool before(const Rational& a, const Rational& b) { return a < b; }
  static Rational mul(const Rational& a, const Rational& b) { return a + b; }
  static Rational inv(const Rational& a) { return -a; }
  static Rational pow(const Rational& a, const Rational& q) { return q * a; }
  static bool valid(const Rational&) { return true; }
  static Rational from_rational(const Rational& q) { return q; }
};

/// Addition is min, so the semifield order is the reverse of the numeric one.
struct MinPlusFloatTraits {
  using rep_type = double;
  static constexpr SemifieldKind kind = SemifieldKind::min_plus_float;
  static constexpr bool exact = false;
  static constexpr bool max_plus = false;

  static double one() { return 0.0; }
  static bool before(double a, double b) { return a > b; }
  static double mul(double a, double b) { return a + b; }
  static double inv(double a) { return -a; }
  static double pow(double a, const Rational& q) { return q.get_d() * a; }
  static bool valid(double a) { return std::isfinite(a); }
  static double from_rational(const Rational& q) { return q.get_d(); }
};

/// Invertible elements are the positive reals; the bottom element is 0.
struct MaxTimesFloatTraits {
  using rep_type = double;
  static constexpr SemifieldKind kind = SemifieldKind::max_times_float;
  static constexpr bool exact = false;
  static constexpr bool max_plus = false;

  static double one() { return 1.0; }
  static bool before(double a, double b) { return a < b; }
  static double mul(double a, double b) { return a * b; }
  static double inv(double a) { return 1.0 / a; }
  static double pow(double a, const Rational& q) { return std::pow(a, q.get_d()); }
  static bool valid(double a) { return std::isfinite(a) && a > 0.0; }
  static double from_rational(const Rational& q) { return q.get_d(); }
};

template <class T>
concept SemifieldTraits = requires(const typename T::rep_type& a, const Rational& q) {
  { T::kind } -> std::convertible_to<SemifieldKind>;
  { T::exact } -> std::convertible_to<bool>;
  { T::one() } -> std::convertible_to<typename T::rep_type>;
  { T::before(a, a) } -> std::convertible_to<bool>;
  { T::mul(a, a) } -> std::convertible_to<typename T::rep_type>;
  { T::inv(a) } -> std::convertible_to<typename T::rep_type>;
  { T::pow(a, q) } -> std::convertible_to<typename T::rep_type>;
  { T::valid(a) } -> std::convertible_to<bool>;
};

/// A concrete semifield instance. Cheap to copy; carries only the tolerance.
template <SemifieldTraits Traits>
class Semifield {
 public:
  using traits_type = Traits;
  using rep_type = typename Traits::rep_type;
  using scalar_type = Scalar<rep_type>;

  static constexpr SemifieldKind kind = Traits::kind;
  static constexpr bool exact = Traits::exact;

  /// Exact kinds ignore the tolerance argument and always use zero.
  explicit Semifield(double tolerance = kDefaultTolerance)
      : tolerance_(exact ? 0.0 : tolerance) {
    if (!(tolerance_ >= 0.0) || !std::isfinite(tolerance_)) {
      throw std::invalid_argument("tolerance must be a finite nonnegative number");
    }
  }

  double tolerance() const noexcept { return tolerance_; }

  scalar_type zero() const { return scalar_type(); }
  scalar_type one() const { return scalar_type(Traits::one()); }

  /// Wraps a representation value; rejects values outside the invertible part.
  scalar_type make(rep_type value) const {
    if (!Traits::valid(value)) {
      throw std::domain_error("value is not an invertible element of this semifield");
    }
    return scalar_type(std::move(value));
  }

  scalar_type from_rational(const Rational& q) const { return make(Traits::from_rational(q)); }

  scalar_type add(const scalar_type& x, const scalar_type& y) const {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    return Traits::before(x.value(), y.value()) ? y : x;
  }

  scalar_type mul(const scalar_type& x, const scalar_type& y) const {
    if (x.is_zero() || y.is_zero()) return zero();
    return scalar_type(Traits::mul(x.value(), y.value()));
  }

  scalar_type inv(const scalar_type& x) const {
    if (x.is_zero()) throw InversionOfZero();
    return scalar_type(Traits::inv(x.value()));
  }

  /// x^q. The bottom element admits only positive exponents.
  scalar_type pow(const scalar_type& x, const Rational& q) const {
    if (x.is_zero()) {
      if (sgn(q) <= 0) throw ZeroToNonpositivePower();
      return zero();
    }
    return scalar_type(Traits::pow(x.value(), q));
  }

  scalar_type sqrt(const scalar_type& x) const { return pow(x, ratio(1, 2)); }

  /// x / y, i.e. x ⊗ y⁻¹.
  scalar_type div(const scalar_type& x, const scalar_type& y) const { return mul(x, inv(y)); }

  bool eq(const scalar_type& x, const scalar_type& y) const {
    if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
    return near(x.value(), y.value());
  }

  bool leq(const scalar_type& x, const scalar_type& y) const {
    if (x.is_zero()) return true;
    if (y.is_zero()) return false;
    return Traits::before(x.value(), y.value()) || near(x.value(), y.value());
  }

  bool lt(const scalar_type& x, const scalar_type& y) const { return !leq(y, x); }

  scalar_type min(const scalar_type& x, const scalar_type& y) const {
    if (x.is_zero() || y.is_zero()) return zero();
    return Traits::before(x.value(), y.value()) ? x : y;
  }

  bool is_one(const scalar_type& x) const { return eq(x, one()); }

  friend bool operator==(const Semifield& a, const Semifield& b) {
    return a.tolerance_ == b.tolerance_;
  }

 private:
  bool near(const rep_type& a, const rep_type& b) const {
    if constexpr (exact) {
      return a == b;
    } else {
      const double scale = std::max({1.0, std::abs(a), std::abs(b)});
      return std::abs(a - b) <= tolerance_ * scale;
    }
  }

  double tolerance_;
};

using MaxPlusFloat = Semifield<MaxPlusFloatTraits>;
using MaxPlusRational = Semifield<MaxPlusRationalTraits>;
using MinPlusFloat = Semifield<MinPlusFloatTraits>;
using MaxTimesFloat = Semifield<MaxTimesFloatTraits>;

template <class F>
inline constexpr bool is_max_plus_v = F::traits_type::max_plus;

}  // namespace tropic
