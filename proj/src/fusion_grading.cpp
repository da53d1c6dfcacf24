#include "potts/fusion/grading.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace potts::fusion {

std::string GradingAssignment::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ", ";
        os << ring->label(i).display() << " -> " << values[i].str();
    }
    return os.str();
}

bool GradingAssignment::operator==(const GradingAssignment& o) const {
    if (values.size() != o.values.size()) return false;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] != o.values[i]) return false;
    return true;
}

GradingAssignment make_grading(const FusionRing& ring, unsigned n, const std::vector<long>& exps) {
    GradingAssignment g;
    g.ring = &ring;
    unsigned order = 1;
    for (long e : exps) {
        auto v = CycScalar::root_of_unity(n, e);
        order = std::lcm(order, v.multiplicative_order());
        g.values.push_back(std::move(v));
    }
    g.order = order;
    return g;
}

bool check_grading(const FusionRing& ring, const GradingAssignment& g, std::string* witness) {
    if (g.values.size() != ring.size())
        throw std::invalid_argument("grading not defined on all labels");
    if (!g.values[ring.identity_index()].is_one()) {
        if (witness) *witness = "identity label not mapped to 1";
        return false;
    }
    for (std::size_t i = 0; i < ring.size(); ++i)
        for (std::size_t j = 0; j < ring.size(); ++j)
            for (std::size_t k = 0; k < ring.size(); ++k) {
                if (ring.N(i, j, k) == 0) continue;
                if (g.values[i] * g.values[j] != g.values[k]) {
                    if (witness)
                        *witness = ring.label(i).display() + " x " + ring.label(j).display() +
                                   " -> " + ring.label(k).display();
                    return false;
                }
            }
    return true;
}

GradingGroup enumerate_gradings(const FusionRing& ring, unsigned max_order) {
    if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
    unsigned m = 1;
    for (unsigned k = 2; k <= max_order; ++k) m = std::lcm(m, k);

    // Depth-first enumeration of exponent assignments modulo m, pruning
    // with every product constraint among the already-assigned labels; the
    // identity label is pinned to exponent 0.
    std::vector<long> exps(ring.size(), 0);
    std::vector<std::vector<long>> raw;
    struct Pinner {
        const FusionRing& ring;
        unsigned m;
        std::vector<long>& exps;
        std::vector<std::vector<long>>& out;
        std::size_t id;
        void run(std::size_t next) {
            const std::size_t n = ring.size();
            if (next == n) {
                out.push_back(exps);
                return;
            }
            auto consistent = [&](std::size_t upto) {
                for (std::size_t i = 0; i <= upto; ++i)
                    for (std::size_t j = 0; j <= upto; ++j)
                        for (std::size_t k = 0; k <= upto; ++k)
                            if (ring.N(i, j, k) != 0 &&
                                (exps[i] + exps[j] - exps[k]) % static_cast<long>(m) != 0)
                                return false;
                return true;
            };
            const long lo = next == id ? 0 : 0;
            const long hi = next == id ? 1 : static_cast<long>(m);
            for (long v = lo; v < hi; ++v) {
                exps[next] = v;
                if (consistent(next)) run(next + 1);
            }
        }
    } pinner{ring, m, exps, raw, ring.identity_index()};
    pinner.run(0);

    GradingGroup group;
    for (const auto& e : raw) {
        auto g = make_grading(ring, m, e);
        if (g.order > max_order) continue;
        std::string witness;
        if (!check_grading(ring, g, &witness))
            throw std::logic_error("enumerated grading fails verification: " + witness);
        group.assignments.push_back(std::move(g));
    }

    // Group structure: closure under pointwise product and inverse.
    auto find = [&](const GradingAssignment& g) {
        for (const auto& h : group.assignments)
            if (h == g) return true;
        return false;
    };
    group.closed_under_product = true;
    for (const auto& a : group.assignments) {
        for (const auto& b : group.assignments) {
            GradingAssignment p;
            p.ring = &ring;
            unsigned order = 1;
            for (std::size_t i = 0; i < a.values.size(); ++i) {
                auto v = a.values[i] * b.values[i];
                order = std::lcm(order, v.multiplicative_order());
                p.values.push_back(std::move(v));
            }
            p.order = order;
            if (!find(p)) group.closed_under_product = false;
        }
    }
    group.group_order = static_cast<unsigned>(group.assignments.size());
    group.cyclic = false;
    for (const auto& a : group.assignments)
        if (a.order == group.group_order) group.cyclic = true;
    return group;
}

AutomorphismDescriptor build_automorphism(const DecomposedSpace& space,
                                          const GradingAssignment& g) {
    std::string witness;
    if (!check_grading(*g.ring, g, &witness))
        throw std::invalid_argument("grading rejected: " + witness);
    AutomorphismDescriptor desc;
    for (const auto& c : space.components) {
        if (c.label >= g.ring->size()) throw std::invalid_argument("component label out of range");
        const auto& v = g.values[c.label];
        desc.entries.push_back({c.label, c.multiplicity, v, v.multiplicative_order()});
    }
    return desc;
}

unsigned verify_order(const AutomorphismDescriptor& desc) {
    unsigned order = 1;
    for (const auto& e : desc.entries) order = std::lcm(order, e.eigenvalue_order);
    return order;
}

}  // namespace potts::fusion
