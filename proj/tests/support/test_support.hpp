#pragma once

#include <string>
#include <string_view>

#include <tropic/tropic.hpp>

namespace tropic::testing {

/// "[0 -inf; 2 1]" in the given semifield.
template <class F>
Matrix<F> mat(const F& f, std::string_view text) {
  return to_matrix(f, parse_matrix_text(text));
}

/// "[1 -inf 3]" in the given semifield.
template <class F>
Vector<F> vec(const F& f, std::string_view text) {
  return to_vector(f, parse_vector_text(text));
}

template <class F, class Tag>
std::string str(const detail::Array<F, Tag>& v) {
  return format_vector(v);
}

template <class F>
std::string str(const Matrix<F>& A) {
  return format_matrix(A);
}

template <class F>
std::string str(const Distance<F>& d, const F& f) {
  return d.is_infinite() ? std::string("inf") : format_scalar(f, d.value());
}

inline const MaxPlusRational kQ{};
inline const MaxPlusFloat kR{};
inline const MinPlusFloat kMin{};
inline const MaxTimesFloat kTimes{};

}  // namespace tropic::testing
