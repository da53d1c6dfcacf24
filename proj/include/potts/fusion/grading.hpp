#pragma once

/// @file grading.hpp
/// Root-of-unity gradings of fusion rings and the diagonal automorphisms
/// they induce on decomposed module spaces.
///
/// A grading assigns a root of unity to every label such that
/// N^k_{ij} != 0 implies g(i) g(j) = g(k).  The set of gradings of a ring
/// is a finite abelian group under pointwise product; enumerate_gradings
/// computes it exhaustively by constraint propagation over exponents.

#include "potts/cyclotomic.hpp"
#include "potts/fusion/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace potts::fusion {

struct GradingAssignment {
    const FusionRing* ring = nullptr;
    std::vector<CycScalar> values;  // one per label
    unsigned order = 1;             // lcm of the value orders

    std::string str() const;
    bool operator==(const GradingAssignment& o) const;
};

/// Builds an assignment from per-label exponents e_i (value zeta_N^{e_i}),
/// computing its order.
GradingAssignment make_grading(const FusionRing& ring, unsigned n, const std::vector<long>& exps);

/// True iff g is compatible with the fusion products.  On failure, the
/// witness receives the first violating (i, j, k).
bool check_grading(const FusionRing& ring, const GradingAssignment& g,
                   std::string* witness = nullptr);

struct GradingGroup {
    std::vector<GradingAssignment> assignments;
    bool closed_under_product = false;
    bool cyclic = false;
    unsigned group_order = 0;
};

/// All gradings whose value orders divide lcm(1..max_order) and whose
/// overall order is at most max_order, together with the group structure.
GradingGroup enumerate_gradings(const FusionRing& ring, unsigned max_order);

/// A space presented as a direct sum of labelled components; multiplicity
/// -1 encodes a countably infinite multiplicity.
struct DecomposedSpace {
    struct Component {
        std::size_t label;
        long multiplicity;  // >= 0, or -1 for countable
    };
    std::vector<Component> components;
};

/// Diagonal operator induced by a grading on a decomposed space.
struct AutomorphismDescriptor {
    struct Entry {
        std::size_t label;
        long multiplicity;
        CycScalar eigenvalue;
        unsigned eigenvalue_order;
    };
    std::vector<Entry> entries;
};

/// Requires check_grading(g) to hold; throws std::invalid_argument otherwise.
AutomorphismDescriptor build_automorphism(const DecomposedSpace& space,
                                          const GradingAssignment& g);

/// Multiplicative order of the diagonal operator: lcm of the eigenvalue
/// orders present.
unsigned verify_order(const AutomorphismDescriptor& desc);

}  // namespace potts::fusion
