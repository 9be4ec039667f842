#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace eqarg {

using Rational = mpq_class;

/// Parses "3/4", "-2" or "0.25" into an exact rational.
std::optional<Rational> parse_rational(const std::string& text);

/// Canonical "p/q" (just "p" when the denominator is 1).
std::string rational_str(const Rational& q);

/// Exact value of a finite double (every finite double is rational).
Rational rational_from_double(double x);

/// Best rational approximation with denominator <= max_den, by continued
/// fractions. Used when floats cross an interface that needs exact values.
Rational rational_from_double_bounded(double x, std::uint64_t max_den = 1000000000ull);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace eqarg
