#pragma once

/// @file branch.hpp
/// The branching solver: expresses a coset-module character as a
/// nonnegative-integer combination of candidate product characters and
/// reports the multiplicities, or diagnoses why it cannot.

#include "potts/chars/series.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace potts::chars {

struct BranchResult {
    bool success = false;
    std::vector<long> multiplicities;  // aligned with the candidate list
    std::string diagnosis;             // empty on success
};

/// Solves target = sum_j m_j candidate_j exactly on every exponent up to
/// the common cutoff, with m_j nonnegative integers.  Candidates whose
/// leading exponent lies outside the target's exponent classes mod 1 are
/// pinned to zero.  Fails with a diagnosis when the system is
/// inconsistent, non-integral, or not uniquely determined.
BranchResult branch_solver(const CharacterSeries& target,
                           const std::vector<CharacterSeries>& candidates);

/// A candidate triple product chi_{1/2,h1} chi_{7/10,h2} chi_{4/5,h3}.
struct TripleCandidate {
    std::array<Rational, 3> weights;
    CharacterSeries chi;
};

/// The 108 products over h1 in {0,1/2,1/16}, h2 in the six c=7/10
/// weights, h3 in the six sigma-even c=4/5 weights.
std::vector<TripleCandidate> triple_candidates(const Rational& cutoff,
                                               long scale = kDefaultScale);

/// Branches the coset module of `rep` over the triple candidates;
/// returns the nonzero multiplicities with their weight triples.
struct ModuleBranching {
    bool success = false;
    std::vector<std::pair<std::array<Rational, 3>, long>> components;
    std::string diagnosis;
};
ModuleBranching branch_module(const fock::Lattice& lat, const fock::CosetVector& rep,
                              const Rational& cutoff, long scale = kDefaultScale);

}  // namespace potts::chars
