#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace regseq {

/// Exact arbitrary-precision rational. GMP keeps values canonical
/// (denominator positive, numerator and denominator coprime) through
/// arithmetic; construction from parts canonicalizes explicitly.
using Rational = mpq_class;

/// Parses "p/q" or a plain integer. Throws std::invalid_argument on garbage
/// or a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view s);

/// Renders as "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

}  // namespace regseq
