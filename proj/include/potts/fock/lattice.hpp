#pragma once

/// @file lattice.hpp
/// Even positive-definite lattices given by a Gram matrix, and the coset
/// vectors (rational coordinate tuples) the Fock engine grades over.

#include "potts/linalg.hpp"
#include "potts/rational.hpp"

#include <cstddef>
#include <vector>

namespace potts::fock {

/// A coset vector in lattice coordinates (rational coefficients of the
/// lattice basis).
using CosetVector = Vec;

struct Lattice {
    std::size_t rank;
    Mat gram;      // symmetric, positive definite
    Mat gram_inv;  // cached inverse

    /// u^T . gram . v
    Rational inner(const CosetVector& u, const CosetVector& v) const;

    /// <v,v>/2, the degree contribution of the exponential e^v.
    Rational half_norm(const CosetVector& v) const;
};

/// Validates symmetry and positive definiteness (leading principal
/// minors > 0); throws std::invalid_argument otherwise.
Lattice make_lattice(Mat gram);

/// The default instance: gram [[4,-2],[-2,4]].
const Lattice& sqrt2_a2();

/// Coset representatives of the default instance: (0,0), (1/3,2/3), (2/3,1/3).
CosetVector coset_rep(int g);

}  // namespace potts::fock
