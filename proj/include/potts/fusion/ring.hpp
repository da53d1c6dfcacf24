#pragma once

/// @file ring.hpp
/// Fusion rings: an ordered basis of module labels with nonnegative
/// integer structure constants N^k_{ij}, a distinguished identity and a
/// duality permutation.  Includes the axiom checker and the line-based
/// text serialization.

#include "potts/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace potts::fusion {

/// Irreducible-module label: a name, its lowest conformal weight and an
/// optional sign flavor (+1 / -1 / 0 for none).
struct Label {
    std::string name;
    Rational weight;
    int flavor = 0;

    /// Display form, e.g. "W(2/3,+)" for name "W(2/3)" with flavor +1.
    std::string display() const;
    bool operator==(const Label& o) const {
        return name == o.name && weight == o.weight && flavor == o.flavor;
    }
};

/// One axiom-check outcome with an optional witness description.
struct AxiomResult {
    std::string axiom;
    bool pass = true;
    std::string witness;  // empty when pass
};

struct AxiomReport {
    std::vector<AxiomResult> results;
    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
};

class FusionRing {
public:
    /// Builds a ring and validates the cheap structural invariants
    /// (identity row, dual an involution fixing the identity); throws
    /// std::invalid_argument on violation.  Deeper axioms are checked by
    /// check_axioms so that deliberately broken tables can be constructed
    /// for testing.
    FusionRing(std::string name, std::vector<Label> basis, std::size_t identity,
               std::vector<std::size_t> dual, std::vector<int> table);

    const std::string& name() const { return name_; }
    std::size_t size() const { return basis_.size(); }
    const std::vector<Label>& basis() const { return basis_; }
    const Label& label(std::size_t i) const { return basis_.at(i); }
    std::size_t identity_index() const { return identity_; }
    std::size_t dual(std::size_t i) const { return dual_.at(i); }

    /// Structure constant N^k_{ij}.
    int N(std::size_t i, std::size_t j, std::size_t k) const;

    /// {(k, N^k_{ij}) : N^k_{ij} > 0} in basis order.
    std::vector<std::pair<std::size_t, int>> multiply(std::size_t i, std::size_t j) const;

    /// Index lookup by display name; throws std::out_of_range when absent.
    std::size_t index_of(const std::string& display_name) const;
    std::optional<std::size_t> find(const std::string& display_name) const;

    /// Exhaustive identity / commutativity / Frobenius / associativity check.
    AxiomReport check_axioms() const;

    /// Line-based text format; round-trips bit-exactly through parse.
    std::string serialize() const;
    static FusionRing parse(const std::string& text);

    /// A mutated copy with one structure constant overridden (test helper
    /// for axiom-failure witnesses).
    FusionRing with_constant(std::size_t i, std::size_t j, std::size_t k, int value) const;

    bool same_table(const FusionRing& other) const;

private:
    std::size_t flat(std::size_t i, std::size_t j, std::size_t k) const;

    std::string name_;
    std::vector<Label> basis_;
    std::size_t identity_;
    std::vector<std::size_t> dual_;
    std::vector<int> table_;  // flattened [i][j][k]
};

}  // namespace potts::fusion
