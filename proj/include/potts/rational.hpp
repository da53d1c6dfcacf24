#pragma once

/// @file rational.hpp
/// Exact rational scalars used throughout the toolkit.
///
/// Every quantity in the pipeline (inner products, conformal weights,
/// series coefficients, structure constants) is an exact rational; no
/// floating point enters except inside the numerically-gated Verlinde
/// builder, whose output is re-verified exactly.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace potts {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (both invariants are maintained by the backend).
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// True iff r is an integer.
inline bool is_integer(const Rational& r) { return den(r) == 1; }

/// Largest integer <= r.
inline BigInt rational_floor(const Rational& r) {
    BigInt q = num(r) / den(r);
    if (num(r) < 0 && q * den(r) != num(r)) --q;
    return q;
}

/// r^e for integer e >= 0.
inline Rational rational_pow(const Rational& r, unsigned long e) {
    Rational acc(1), base(r);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

/// Parse "a", "-a" or "a/b" into a rational; throws std::invalid_argument
/// on malformed input.
Rational parse_rational(const std::string& text);

/// Render as "a" or "a/b" (lowest terms, sign on the numerator).
std::string to_string(const Rational& r);

/// Exact square root if r is a perfect square of a rational, otherwise
/// std::nullopt.
std::optional<Rational> rational_sqrt(const Rational& r);

}  // namespace potts
