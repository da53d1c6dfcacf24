#pragma once

/// @file series.hpp
/// Truncated formal q-series with exponents in (1/N)*Z and exact rational
/// coefficients.
///
/// Each series records a denominator scale N and a cutoff: every stored
/// exponent is an integer multiple of 1/N and at most the cutoff.  Asking
/// for a coefficient beyond the cutoff is an error (the value is unknown,
/// not zero) — this prevents truncation from silently faking a vanishing
/// coefficient in the nonvanishing-evidence pipeline.

#include "potts/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace potts {

/// Raised when a computation cannot be completed at the configured cutoff.
/// The CLI maps it to exit code 3.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FracSeries {
public:
    /// The zero series at the given scale and cutoff.
    FracSeries(long scale, const Rational& cutoff);

    long scale() const { return scale_; }
    const Rational& cutoff() const { return cutoff_; }

    /// Set/accumulate the coefficient at exponent e.  Exponents beyond the
    /// cutoff are dropped (the truncation boundary is part of the type);
    /// e must be a multiple of 1/scale.
    void add_term(const Rational& e, const Rational& coeff);

    /// Stored coefficient (0 when absent); throws TruncationError when
    /// e exceeds the cutoff.
    Rational coeff(const Rational& e) const;

    /// Smallest exponent with nonzero coefficient; throws on the zero series.
    Rational leading_exponent() const;

    bool is_zero() const;

    /// Coefficient-wise sum.  Scales are merged to their lcm and the result
    /// cutoff is the minimum of the two.
    FracSeries operator+(const FracSeries& rhs) const;
    FracSeries operator-(const FracSeries& rhs) const;

    /// Convolution product truncated at the given cutoff (which may not
    /// exceed what the operand cutoffs support).
    FracSeries mul(const FracSeries& rhs, const Rational& cutoff) const;
    /// Convolution product at min(cutoff, rhs.cutoff).
    FracSeries operator*(const FracSeries& rhs) const;

    FracSeries scaled(const Rational& c) const;

    /// Re-express over a new scale (a multiple of the current one).
    FracSeries rescaled(long new_scale) const;

    /// One "q^{a/b}: c" line per term in increasing exponent order.
    std::string str() const;

    /// Iterate terms as (exponent, coefficient) in increasing order.
    std::map<long, Rational>::const_iterator begin() const { return terms_.begin(); }
    std::map<long, Rational>::const_iterator end() const { return terms_.end(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational exponent_of(long key) const { return Rational(key, scale_); }

private:
    long key_of(const Rational& e) const;

    long scale_;
    Rational cutoff_;
    std::map<long, Rational> terms_;  // key = exponent * scale
};

/// Constant series 1 at the given scale/cutoff.
FracSeries series_one(long scale, const Rational& cutoff);

}  // namespace potts
