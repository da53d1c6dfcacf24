#pragma once

/// @file verlinde.hpp
/// Independent oracle for minimal-model fusion tables via the Verlinde
/// formula.  The modular S-matrix of the (p,q) minimal model is evaluated
/// in floating point from the closed sine-product form; the resulting
/// fusion numbers are rounded to integers under a strict residual gate and
/// then re-verified exactly with the axiom checker.

#include "potts/fusion/ring.hpp"

namespace potts::fusion {

/// Thrown when the rounding residual exceeds the gate or the rounded
/// table fails the exact axiom check.
class VerlindeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Builds the (p,q) minimal-model fusion ring.  Requires 2 <= p < q and
/// gcd(p,q) = 1.  Labels are (r,s) with 1 <= r < p, 1 <= s < q modulo
/// (r,s) ~ (p-r, q-s); each label is named by its conformal weight
/// ((qr - ps)^2 - (p-q)^2) / (4pq).
FusionRing verlinde_minimal(unsigned p, unsigned q, double residual_gate = 1e-6);

/// True iff the two rings have the same structure constants after
/// matching labels by conformal weight (weights must be unique per ring).
bool same_ring_by_weight(const FusionRing& a, const FusionRing& b);

}  // namespace potts::fusion
