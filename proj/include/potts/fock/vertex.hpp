#pragma once

/// @file vertex.hpp
/// Exact vertex-operator modes on the lattice Fock space: Heisenberg
/// modes, exponential-operator modes, the general n-th normal product,
/// the Virasoro vector and the Griess product.
///
/// All computations are exact; the optional cutoff is a contract bound on
/// the degree of the requested result, and a TruncationError is raised
/// when the result would live beyond it.

#include "potts/fock/lattice.hpp"
#include "potts/fock/vector.hpp"
#include "potts/series.hpp"

#include <optional>
#include <utility>

namespace potts::fock {

using Cutoff = std::optional<Rational>;

/// Applies the Heisenberg mode a(n): creation for n < 0, the eigenvalue
/// <a,beta> for n = 0, contraction via [a(m), b(n)] = m <a,b> delta_{m+n,0}
/// for n > 0.  `a` is a coefficient vector over the lattice basis.
FockVector heisenberg_mode(const Lattice& lat, const CosetVector& a, long n, const FockVector& v);

/// (e^a)_n v: the coefficient of z^{-n-1} in the exponential vertex
/// operator, computed by finite expansion of both exponential factors.
FockVector exp_mode(const Lattice& lat, const CosetVector& a, const Rational& n,
                    const FockVector& v, const Cutoff& cutoff = std::nullopt);

/// u_n v for arbitrary u in the canonical basis, by structural recursion
/// through the normal-product formula.
FockVector vertex_mode(const Lattice& lat, const FockVector& u, const Rational& n,
                       const FockVector& v, const Cutoff& cutoff = std::nullopt);

/// The Virasoro vector omega = 1/2 sum_{ij} (gram^{-1})_{ij} x_i(-1)x_j(-1) e^0.
FockVector virasoro_vector(const Lattice& lat);

/// u_1 v for degree-2 u, v.
FockVector griess_product(const Lattice& lat, const FockVector& u, const FockVector& v);

/// True with the central charge c iff e_1 e = 2e, e_2 e = 0,
/// e_3 e = (c/2) e^0 and e_n e = 0 for 4 <= n <= degree bound.  The zero
/// vector is rejected.
std::pair<bool, Rational> conformal_check(const Lattice& lat, const FockVector& e);

}  // namespace potts::fock
