#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tropic {

/// Arbitrary-precision rational, always kept in canonical (lowest terms) form.
using Rational = mpq_class;

/// n/d in lowest terms. mpq_class(n, d) alone does not canonicalize, and
/// comparisons on non-canonical values are wrong.
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p/q", an integer, or a plain decimal ("-1.25", ".5", "3.") exactly.
/// Throws ParseError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

}  // namespace tropic
