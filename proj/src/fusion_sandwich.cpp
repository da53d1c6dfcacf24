#include "potts/fusion/sandwich.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <sstream>

namespace potts::fusion {

namespace {

using Triple = std::array<std::size_t, 3>;

/// Closure of a triple under commutativity (i,j,k) -> (j,i,k) and
/// Frobenius reciprocity (i,j,k) -> (j, dual k, dual i).
std::set<Triple> orbit_of(const Triple& t, const std::vector<std::size_t>& dual) {
    std::set<Triple> seen;
    std::vector<Triple> stack = {t};
    while (!stack.empty()) {
        const Triple cur = stack.back();
        stack.pop_back();
        if (!seen.insert(cur).second) continue;
        stack.push_back({cur[1], cur[0], cur[2]});
        stack.push_back({cur[1], dual[cur[2]], dual[cur[0]]});
    }
    return seen;
}

/// Multiplicity of base label b in a restriction multiset.
int mult_of(const std::vector<std::size_t>& comps, std::size_t b) {
    return static_cast<int>(std::count(comps.begin(), comps.end(), b));
}

struct SumConstraint {
    // sum of coeff * N(triple) over entries <= bound
    std::vector<std::pair<Triple, int>> entries;
    int bound = 0;
    std::string description;
};

std::vector<SumConstraint> build_constraints(const std::vector<Label>& labels,
                                             const std::vector<std::size_t>& dual,
                                             const Branching& br, const FusionRing& base) {
    const std::size_t n = labels.size();
    std::vector<SumConstraint> cons;

    // Per-pair column bounds: the restriction of W1 x W2 embeds into the
    // base fusion product of the restrictions.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t b = 0; b < base.size(); ++b) {
                SumConstraint c;
                for (std::size_t k = 0; k < n; ++k)
                    if (int m = mult_of(br.components[k], b); m > 0)
                        c.entries.push_back({{i, j, k}, m});
                if (c.entries.empty()) continue;
                int bound = 0;
                for (auto b1 : br.components[i])
                    for (auto b2 : br.components[j]) bound += base.N(b1, b2, b);
                c.bound = bound;
                c.description = "restriction of " + labels[i].display() + " x " +
                                labels[j].display() + " at base " + base.label(b).display();
                cons.push_back(std::move(c));
            }
        }
    }

    // Dual-orbit sum bounds.  Labels are grouped with their contragredients;
    // the representative restriction is the branch component whose weight
    // matches the label's lowest weight.
    auto primary = [&](std::size_t i) -> std::optional<std::size_t> {
        for (auto b : br.components[i])
            if (base.label(b).weight == labels[i].weight) return b;
        return std::nullopt;
    };
    std::vector<std::vector<std::size_t>> orbits;
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        std::vector<std::size_t> o = {i};
        used[i] = true;
        if (dual[i] != i && !used[dual[i]]) {
            o.push_back(dual[i]);
            used[dual[i]] = true;
        }
        orbits.push_back(std::move(o));
    }
    for (const auto& o1 : orbits) {
        const auto r1 = primary(o1[0]);
        if (!r1) continue;
        for (const auto& o2 : orbits) {
            const auto r2 = primary(o2[0]);
            if (!r2) continue;
            for (std::size_t k = 0; k < n; ++k) {
                SumConstraint c;
                for (auto i : o1)
                    for (auto j : o2) c.entries.push_back({{i, j, k}, 1});
                int bound = 0;
                for (auto b : br.components[k]) bound += base.N(*r1, *r2, b);
                c.bound = bound;
                c.description = "dual-orbit bound at output " + labels[k].display();
                cons.push_back(std::move(c));
            }
        }
    }
    return cons;
}

}  // namespace

BoundReport check_branching_bounds(const FusionRing& ext, const FusionRing& base,
                                   const Branching& br) {
    BoundReport rep;
    std::vector<Label> labels = ext.basis();
    std::vector<std::size_t> dual(ext.size());
    for (std::size_t i = 0; i < ext.size(); ++i) dual[i] = ext.dual(i);
    for (const auto& c : build_constraints(labels, dual, br, base)) {
        long total = 0;
        for (const auto& [t, m] : c.entries) total += static_cast<long>(m) * ext.N(t[0], t[1], t[2]);
        if (total > c.bound)
            rep.violations.push_back(
                {c.description + ": total " + std::to_string(total) + " exceeds bound " +
                 std::to_string(c.bound)});
    }
    return rep;
}

std::string AmbiguityReport::describe(const std::vector<Label>& basis) const {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << "undetermined in [" << e.lower << ", " << e.upper << "]:";
        for (const auto& t : e.orbit)
            os << " N(" << basis[t[0]].display() << ", " << basis[t[1]].display() << " -> "
               << basis[t[2]].display() << ")";
        os << "\n";
    }
    return os.str();
}

std::variant<FusionRing, AmbiguityReport> determine_extension_ring(
    const std::string& name, const std::vector<Label>& labels, std::size_t identity,
    const std::vector<std::size_t>& dual, const Branching& br, const FusionRing& base,
    const EvidenceSet& ev) {
    const std::size_t n = labels.size();
    if (br.components.size() != n || dual.size() != n)
        throw std::invalid_argument("branching/dual shape mismatch");

    // Entry classes under the symmetry closure; one interval per class.
    std::map<Triple, std::size_t> class_of;
    std::vector<std::set<Triple>> classes;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Triple t{i, j, k};
                if (class_of.count(t)) continue;
                auto orb = orbit_of(t, dual);
                for (const auto& o : orb) class_of[o] = classes.size();
                classes.push_back(std::move(orb));
            }

    std::vector<int> lo(classes.size(), 0), hi(classes.size(), 1 << 20);
    auto pin = [&](const Triple& t, int value) {
        const std::size_t c = class_of.at(t);
        lo[c] = std::max(lo[c], value);
        hi[c] = std::min(hi[c], value);
        if (lo[c] > hi[c])
            throw ContradictionError("identity/evidence contradiction at class " +
                                     std::to_string(c));
    };
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) pin({identity, j, k}, j == k ? 1 : 0);
    for (const auto& e : ev.triples) {
        if (e.i >= n || e.j >= n || e.k >= n)
            throw std::invalid_argument("evidence label out of range");
        const std::size_t c = class_of.at({e.i, e.j, e.k});
        lo[c] = std::max(lo[c], 1);
    }

    const auto cons = build_constraints(labels, dual, br, base);

    // Interval propagation to a fixed point: each sum constraint narrows
    // the upper bound of every class it touches.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& c : cons) {
            long sum_lo = 0;
            std::map<std::size_t, int> coeff;  // class -> total coefficient
            for (const auto& [t, m] : c.entries) {
                sum_lo += static_cast<long>(m) * lo[class_of.at(t)];
                coeff[class_of.at(t)] += m;
            }
            if (sum_lo > c.bound)
                throw ContradictionError("evidence violates bound: " + c.description);
            for (const auto& [cls, m] : coeff) {
                const long nb = (c.bound - sum_lo + static_cast<long>(m) * lo[cls]) / m;
                if (nb < hi[cls]) {
                    hi[cls] = static_cast<int>(nb);
                    changed = true;
                    if (hi[cls] < lo[cls])
                        throw ContradictionError("interval collapsed below evidence: " +
                                                 c.description);
                }
            }
        }
    }

    AmbiguityReport amb;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (lo[c] == hi[c]) continue;
        UndeterminedEntry e;
        e.orbit.assign(classes[c].begin(), classes[c].end());
        e.lower = lo[c];
        e.upper = hi[c];
        amb.entries.push_back(std::move(e));
    }
    if (!amb.entries.empty()) return amb;

    std::vector<int> table(n * n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                table[(i * n + j) * n + k] = lo[class_of.at({i, j, k})];
    FusionRing ring(name, labels, identity, dual, std::move(table));

    // A pinned table must still be an actual fusion ring within bounds.
    if (!ring.check_axioms().all_pass())
        throw ContradictionError("pinned table fails the fusion-ring axioms");
    if (!check_branching_bounds(ring, base, br).all_hold())
        throw ContradictionError("pinned table violates the restriction bounds");
    return ring;
}

}  // namespace potts::fusion
