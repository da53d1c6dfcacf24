#pragma once

/// @file evidence.hpp
/// Graded-piece bases of the coset modules, exact simultaneous eigenspace
/// decomposition under the conformal triple, and the named fusion-rule
/// evidence computations consumed by the extension-ring derivation.

#include "potts/fock/conformal.hpp"
#include "potts/fock/lattice.hpp"
#include "potts/fock/vector.hpp"
#include "potts/fock/vertex.hpp"
#include "potts/linalg.hpp"

#include <array>
#include <string>
#include <vector>

namespace potts::fock {

/// All canonical basis states of the (coset, degree) graded piece,
/// sorted; complete by the positive-definite box bound.
std::vector<FockState> graded_basis(const Lattice& lat, const CosetVector& rep,
                                    const Rational& degree);

/// One simultaneous eigenspace of (w1_1, w2_1, w3_1) on a graded piece.
struct EigenComponent {
    std::array<Rational, 3> triple;
    std::vector<Vec> vectors;  // coordinates over the graded basis
};

/// Full simultaneous eigenspace decomposition of the graded piece;
/// throws std::logic_error if the eigenspace dimensions do not exhaust it.
std::vector<EigenComponent> simultaneous_eigenspaces(const Lattice& lat,
                                                     const std::array<ConformalVector, 3>& triple,
                                                     const CosetVector& rep,
                                                     const Rational& degree);

/// Whether the projection of vertex_mode(u, n, v) onto the simultaneous
/// eigenspace with eigenvalues `target` is nonzero.
bool fusion_evidence(const Lattice& lat, const FockVector& u, const FockVector& v,
                     const Rational& n, const std::array<Rational, 3>& target,
                     const std::array<ConformalVector, 3>& triple,
                     const Cutoff& cutoff = std::nullopt);

/// A named evidence item: the nonvanishing fusion products it certifies
/// (as display-label triples of the extension ring) and whether every
/// underlying projection came out nonzero.
struct EvidenceOutcome {
    std::string id;  // CLI item identifier, e.g. "2.7"
    std::vector<std::array<std::string, 3>> triples;
    bool established = false;
};

/// Runs the evidence computations for all items 2.1-2.9 (including the
/// sign-mirrored variants each item states).
std::vector<EvidenceOutcome> compute_evidence_items(const Lattice& lat,
                                                    const std::array<ConformalVector, 3>& triple,
                                                    const Cutoff& cutoff = std::nullopt);

}  // namespace potts::fock
