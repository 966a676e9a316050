#pragma once

/**
 * @file io.hpp
 * @brief Problem files and scalar tokens.
 *
 * Token grammar: a decimal number ("-1.5", "3"), a rational "p/q", or the
 * literal for the bottom element: "-inf" in max-plus kinds, "+inf" in
 * min-plus, "0" in max-times. Float kinds also accept exponent notation.
 *
 * Problem file: statements separated by ';' or newlines, '#' starts a comment.
 *
 *     maxplus-rational
 *     A: [0 2; 1 0]
 *     d: [3 2]
 *
 * Rows inside a matrix literal are separated by ';' or newlines. The kind tag
 * may also be written "semifield: <kind>". A bare matrix file holds one row
 * per line (or a bracketed literal); a vector file holds whitespace-separated
 * tokens, optionally bracketed.
 */

#include <charconv>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "tropic/errors.hpp"
#include "tropic/linalg.hpp"
#include "tropic/rational.hpp"
#include "tropic/semifield.hpp"

namespace tropic {

struct Token {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

using TokenRow = std::vector<Token>;

struct RawProblem {
  std::optional<Token> kind;
  std::vector<TokenRow> matrix;
  TokenRow vector;
};

/// Syntax-level parse; scalar tokens are not interpreted yet.
/// Throws ParseError (with position) and DimensionMismatch.
RawProblem parse_problem_text(std::string_view text);
std::vector<TokenRow> parse_matrix_text(std::string_view text);
TokenRow parse_vector_text(std::string_view text);

/// Whole file as a string; throws Error if it cannot be read.
std::string read_text_file(const std::string& path);

std::string format_double(double value);

/// Literal used for the bottom element of a kind.
std::string_view zero_literal(SemifieldKind kind);

template <class F>
typename F::scalar_type parse_scalar(const F& field, std::string_view text) {
  const std::string_view zero = zero_literal(F::kind);
  if (text == zero) return field.zero();
  if (text == "-inf" || text == "+inf" || text == "inf") {
    throw ParseError("'" + std::string(text) + "' is not valid in " +
                     std::string(to_string(F::kind)) + "; the zero element is written '" +
                     std::string(zero) + "'");
  }
  if constexpr (F::exact) {
    return field.make(parse_rational(text));
  } else {
    double v = 0.0;
    if (text.find('/') != std::string_view::npos) {
      v = parse_rational(text).get_d();
    } else {
      std::string_view body = text;
      if (!body.empty() && body.front() == '+') body.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
      if (ec != std::errc() || ptr != body.data() + body.size() || !std::isfinite(v)) {
        throw ParseError("malformed number '" + std::string(text) + "'");
      }
    }
    if constexpr (F::kind == SemifieldKind::max_times_float) {
      if (v == 0.0) return field.zero();
      if (v < 0.0) throw ParseError("negative value '" + std::string(text) + "' in max-times");
    }
    return field.make(v);
  }
}

template <class F>
std::string format_scalar(const F&, const typename F::scalar_type& x) {
  if (x.is_zero()) return std::string(zero_literal(F::kind));
  if constexpr (F::exact) {
    return format_rational(x.value());
  } else {
    return format_double(x.value());
  }
}

namespace detail {

template <class F>
typename F::scalar_type parse_token(const F& field, const Token& t) {
  try {
    return parse_scalar(field, t.text);
  } catch (const ParseError& e) {
    if (e.line() != 0) throw;
    throw ParseError(e.what(), t.line, t.column);
  } catch (const std::domain_error& e) {
    throw ParseError(e.what(), t.line, t.column);
  }
}

}  // namespace detail

template <class F>
Matrix<F> to_matrix(const F& field, const std::vector<TokenRow>& rows) {
  if (rows.empty() || rows.front().empty()) throw ParseError("empty matrix");
  const std::size_t n = rows.front().size();
  Matrix<F> A(field, rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) {
      const Token& at = rows[i].empty() ? rows.front().front() : rows[i].front();
      throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                           " entries, expected " + std::to_string(n),
                       at.line, at.column);
    }
    for (std::size_t j = 0; j < n; ++j) A(i, j) = detail::parse_token(field, rows[i][j]);
  }
  return A;
}

template <class F>
Vector<F> to_vector(const F& field, const TokenRow& tokens) {
  if (tokens.empty()) throw ParseError("empty vector");
  std::vector<typename F::scalar_type> v;
  v.reserve(tokens.size());
  for (const auto& t : tokens) v.push_back(detail::parse_token(field, t));
  return Vector<F>(field, std::move(v));
}

template <class F>
struct Problem {
  Matrix<F> A;
  Vector<F> d;
};

/// Interprets a raw problem in the given semifield. The caller picks the
/// semifield, normally from raw.kind.
template <class F>
Problem<F> to_problem(const F& field, const RawProblem& raw) {
  Problem<F> p{to_matrix(field, raw.matrix), to_vector(field, raw.vector)};
  if (p.A.rows() != p.d.size()) {
    throw DimensionMismatch("matrix has " + std::to_string(p.A.rows()) + " rows but vector has " +
                            std::to_string(p.d.size()) + " components");
  }
  return p;
}

template <class F, class Tag>
std::string format_vector(const detail::Array<F, Tag>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += format_scalar(v.field(), v[i]);
  }
  return out + "]";
}

template <class F>
std::string format_matrix(const Matrix<F>& A) {
  std::string out = "[";
  for (std::size_t i = 0; i < A.rows(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < A.cols(); ++j) {
      if (j) out += ' ';
      out += format_scalar(A.field(), A(i, j));
    }
  }
  return out + "]";
}

/// Canonical problem file text; parse_problem_text inverts it.
template <class F>
std::string print_problem(const Matrix<F>& A, const Vector<F>& d) {
  return std::string(to_string(F::kind)) + "\nA: " + format_matrix(A) + "\nd: " +
         format_vector(d) + "\n";
}

}  // namespace tropic
