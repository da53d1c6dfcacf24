#pragma once

/// @file conformal.hpp
/// Decomposition of the lattice Virasoro vector into three orthogonal
/// conformal vectors with central charges 1/2, 7/10 and 4/5, plus the
/// eigenvalue bookkeeping built on the resulting triple.

#include "potts/fock/lattice.hpp"
#include "potts/fock/vector.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace potts::fock {

struct ConformalVector {
    FockVector vector;        // pure degree 2
    Rational central_charge;  // verified by conformal_check
};

/// Raised when the search cannot produce the target charges; the message
/// reports what was found instead.
class ConformalSearchError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Finds w1, w2, w3 with charges (1/2, 7/10, 4/5), w1+w2+w3 = omega and
/// pairwise vanishing Griess products.  Only the default lattice instance
/// is supported.
std::array<ConformalVector, 3> conformal_triple_search(const Lattice& lat);

/// Simultaneous (w1_1, w2_1, w3_1) eigenvalues of v, or nullopt when v is
/// not a simultaneous eigenvector.
std::optional<std::array<Rational, 3>> l0_eigentriple(
    const Lattice& lat, const FockVector& v, const std::array<ConformalVector, 3>& triple);

/// True with the weight h iff e_n v = 0 for all n >= 2 and e_1 v = h v.
std::pair<bool, Rational> highest_weight_check(const Lattice& lat, const ConformalVector& e,
                                               const FockVector& v);

/// Extends a lattice automorphism (integer matrix in the x,y basis,
/// columns = images of the basis vectors) to Fock vectors.
FockVector apply_lattice_map(const FockVector& v, const std::array<std::array<long, 2>, 2>& m);

}  // namespace potts::fock
