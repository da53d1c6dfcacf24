#pragma once

/// @file sandwich.hpp
/// Derivation of an extension fusion ring from restriction upper bounds
/// plus nonvanishing evidence.
///
/// Upper bounds come from two families, both induced by restricting a
/// module of the extension algebra to the base subalgebra:
///   - per-pair "column" bounds: the fusion product of two extension
///     modules embeds into the base fusion product of their restrictions,
///     so for each base label the branched output multiplicities are
///     bounded by the base fusion numbers of the restrictions;
///   - dual-orbit sum bounds: for a label paired with its contragredient,
///     the sum of fusion numbers over the pair is bounded by the base
///     fusion number of the common restriction.
/// Lower bounds come from the evidence set, closed under commutativity and
/// Frobenius reciprocity.  Interval propagation runs to a fixed point; a
/// fully pinned table is returned as a ring (and re-verified against the
/// axioms), otherwise the undetermined entries are reported.

#include "potts/fusion/ring.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace potts::fusion {

/// Branching data: for each extension label, the multiset of base-ring
/// label indices in its restriction.
struct Branching {
    std::vector<std::vector<std::size_t>> components;  // indexed by ext label
};

/// A nonvanishing assertion N^k_{ij} >= 1 with a provenance note
/// (the CLI's evidence item id, e.g. "2.7").
struct Evidence {
    std::size_t i, j, k;
    std::string note;
};

struct EvidenceSet {
    std::vector<Evidence> triples;
};

/// One violated inequality from check_branching_bounds.
struct BoundViolation {
    std::string description;
};

struct BoundReport {
    std::vector<BoundViolation> violations;
    bool all_hold() const { return violations.empty(); }
};

/// Verifies every restriction inequality on an existing extension ring.
BoundReport check_branching_bounds(const FusionRing& ext, const FusionRing& base,
                                   const Branching& br);

/// An undetermined entry class (orbit under commutativity/Frobenius) with
/// its surviving interval.
struct UndeterminedEntry {
    std::vector<std::array<std::size_t, 3>> orbit;  // (i, j, k) triples
    int lower = 0, upper = 0;
};

struct AmbiguityReport {
    std::vector<UndeterminedEntry> entries;
    std::string describe(const std::vector<Label>& basis) const;
};

/// Thrown when evidence exceeds an upper bound.
class ContradictionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Runs the sandwich derivation.  `labels`/`dual` describe the candidate
/// extension basis (identity at index `identity`); `br` maps it into
/// `base`.  Returns the unique ring when bounds + evidence pin every
/// entry, otherwise the ambiguity report.
std::variant<FusionRing, AmbiguityReport> determine_extension_ring(
    const std::string& name, const std::vector<Label>& labels, std::size_t identity,
    const std::vector<std::size_t>& dual, const Branching& br, const FusionRing& base,
    const EvidenceSet& ev);

}  // namespace potts::fusion
