#pragma once

/// @file cyclotomic.hpp
/// Exact arithmetic in the N-th cyclotomic field Q(zeta_N).
///
/// Elements are polynomials in zeta_N reduced against the N-th cyclotomic
/// polynomial, so the coefficient vector has length phi(N) and equality is
/// decidable.  Only small orders appear in this project (grading
/// eigenvalues of order 2 and 3), but the implementation is generic.

#include "potts/rational.hpp"

#include <string>
#include <vector>

namespace potts {

/// Monic N-th cyclotomic polynomial, as its coefficient vector
/// (degree phi(N), constant term first).  Computed by dividing x^N - 1 by
/// the cyclotomic polynomials of the proper divisors of N.
std::vector<Rational> cyclotomic_polynomial(unsigned n);

class CycScalar {
public:
    /// Zero in Q(zeta_N).
    explicit CycScalar(unsigned order = 1);
    /// Embeds a rational constant.
    CycScalar(unsigned order, const Rational& constant);

    /// zeta_N^k.
    static CycScalar root_of_unity(unsigned order, long k);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coefficients() const { return coeff_; }

    CycScalar operator+(const CycScalar& rhs) const;
    CycScalar operator-(const CycScalar& rhs) const;
    CycScalar operator*(const CycScalar& rhs) const;
    CycScalar operator-() const;
    bool operator==(const CycScalar& rhs) const;
    bool operator!=(const CycScalar& rhs) const { return !(*this == rhs); }

    bool is_zero() const;
    bool is_one() const;

    /// Smallest k >= 1 with (*this)^k == 1, or 0 when *this is not a root
    /// of unity (only k <= order needs to be probed in a cyclotomic field).
    unsigned multiplicative_order() const;

    CycScalar pow(unsigned long e) const;

    /// Human-readable form, e.g. "1", "z3", "-1/2 - z12^2".
    std::string str() const;

private:
    void reduce(std::vector<Rational>& raw) const;
    static CycScalar from_raw(unsigned order, std::vector<Rational> raw);

    unsigned order_;
    std::vector<Rational> coeff_;  // length phi(order_), index = power of zeta
};

/// Common field for mixed-order operands: both are re-embedded into
/// Q(zeta_lcm).  Used by the grading machinery when comparing assignments
/// of different orders.
CycScalar embed(const CycScalar& v, unsigned new_order);

}  // namespace potts
