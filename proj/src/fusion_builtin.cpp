#include "potts/fusion/builtin.hpp"

#include <map>
#include <stdexcept>

namespace potts::fusion {

namespace {

using ProductRow = std::tuple<const char*, const char*, std::vector<const char*>>;

/// Assemble a commutative fusion table from the products of non-identity
/// pairs; identity rows are filled in automatically.  Every entry in the
/// rows has multiplicity 1 (all tables in this toolkit are
/// multiplicity-free).
FusionRing make_ring(const std::string& name, std::vector<Label> basis, std::size_t identity,
                     std::vector<std::size_t> dual, const std::vector<ProductRow>& rows) {
    const std::size_t n = basis.size();
    std::vector<int> table(n * n * n, 0);
    auto index = [&](const std::string& display) -> std::size_t {
        for (std::size_t i = 0; i < n; ++i)
            if (basis[i].display() == display) return i;
        throw std::logic_error("unknown label in builtin data: " + display);
    };
    auto flat = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };
    for (std::size_t j = 0; j < n; ++j) {
        table[flat(identity, j, j)] = 1;
        if (j != identity) table[flat(j, identity, j)] = 1;
    }
    for (const auto& [a, b, outs] : rows) {
        const std::size_t i = index(a), j = index(b);
        for (const auto* o : outs) {
            const std::size_t k = index(o);
            table[flat(i, j, k)] = 1;
            table[flat(j, i, k)] = 1;
        }
    }
    return FusionRing(name, std::move(basis), identity, std::move(dual), std::move(table));
}

Label minimal_label(const char* weight) { return Label{weight, parse_rational(weight), 0}; }

/// The ten-label Virasoro c = 4/5 fusion table.
FusionRing make_c_full() {
    std::vector<Label> basis;
    for (const char* w : {"0", "2/5", "1/40", "7/5", "21/40", "1/15", "3", "13/8", "2/3", "1/8"})
        basis.push_back(minimal_label(w));
    std::vector<std::size_t> dual(basis.size());
    for (std::size_t i = 0; i < dual.size(); ++i) dual[i] = i;
    const std::vector<ProductRow> rows = {
        {"2/5", "2/5", {"0", "7/5"}},
        {"2/5", "1/40", {"1/8", "21/40"}},
        {"2/5", "7/5", {"2/5", "3"}},
        {"2/5", "21/40", {"1/40", "13/8"}},
        {"2/5", "1/15", {"1/15", "2/3"}},
        {"2/5", "3", {"7/5"}},
        {"2/5", "13/8", {"21/40"}},
        {"2/5", "2/3", {"1/15"}},
        {"2/5", "1/8", {"1/40"}},
        {"1/40", "1/40", {"0", "7/5", "2/3", "1/15"}},
        {"1/40", "7/5", {"1/40", "13/8"}},
        {"1/40", "21/40", {"2/5", "3", "1/15", "2/3"}},
        {"1/40", "1/15", {"1/40", "13/8", "21/40", "1/8"}},
        {"1/40", "3", {"21/40"}},
        {"1/40", "13/8", {"7/5", "1/15"}},
        {"1/40", "2/3", {"21/40", "1/40"}},
        {"1/40", "1/8", {"1/15", "2/5"}},
        {"7/5", "7/5", {"0", "7/5"}},
        {"7/5", "21/40", {"1/8", "21/40"}},
        {"7/5", "1/15", {"2/3", "1/15"}},
        {"7/5", "3", {"2/5"}},
        {"7/5", "13/8", {"1/40"}},
        {"7/5", "2/3", {"1/15"}},
        {"7/5", "1/8", {"21/40"}},
        {"21/40", "21/40", {"0", "7/5", "2/3", "1/15"}},
        {"21/40", "1/15", {"1/8", "21/40", "13/8", "1/40"}},
        {"21/40", "3", {"1/40"}},
        {"21/40", "13/8", {"2/5", "1/15"}},
        {"21/40", "2/3", {"1/40", "21/40"}},
        {"21/40", "1/8", {"1/15", "7/5"}},
        {"1/15", "1/15", {"0", "7/5", "2/3", "1/15", "3", "2/5"}},
        {"1/15", "3", {"1/15"}},
        {"1/15", "13/8", {"1/40", "21/40"}},
        {"1/15", "2/3", {"2/5", "1/15", "7/5"}},
        {"1/15", "1/8", {"1/40", "21/40"}},
        {"3", "3", {"0"}},
        {"3", "13/8", {"1/8"}},
        {"3", "2/3", {"2/3"}},
        {"3", "1/8", {"13/8"}},
        {"13/8", "13/8", {"0", "2/3"}},
        {"13/8", "2/3", {"1/8", "13/8"}},
        {"13/8", "1/8", {"2/3", "3"}},
        {"2/3", "2/3", {"0", "2/3", "3"}},
        {"2/3", "1/8", {"1/8", "13/8"}},
        {"1/8", "1/8", {"0", "2/3"}},
    };
    return make_ring("C_full", std::move(basis), 0, std::move(dual), rows);
}

/// Restriction of C_full to a subset of labels, with a closure check.
FusionRing subring_of_c(const std::string& name, const std::vector<std::string>& keep) {
    const FusionRing full = make_c_full();
    std::vector<std::size_t> src;
    std::vector<Label> basis;
    for (const auto& w : keep) {
        src.push_back(full.index_of(w));
        basis.push_back(full.label(src.back()));
    }
    const std::size_t n = basis.size();
    std::vector<std::size_t> dual(n);
    for (std::size_t i = 0; i < n; ++i) dual[i] = i;
    std::vector<int> table(n * n * n, 0);
    auto flat = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (const auto& [k_full, m] : full.multiply(src[i], src[j])) {
                std::size_t k = n;
                for (std::size_t t = 0; t < n; ++t)
                    if (src[t] == k_full) k = t;
                if (k == n)
                    throw std::invalid_argument(name + " is not closed: " +
                                                full.label(src[i]).display() + " x " +
                                                full.label(src[j]).display() + " contains " +
                                                full.label(k_full).display());
                table[flat(i, j, k)] = m;
            }
        }
    }
    return FusionRing(name, std::move(basis), 0, std::move(dual), std::move(table));
}

/// The six-label extension ring.
FusionRing make_b_ext() {
    std::vector<Label> basis = {
        {"W(0)", Rational(0), 0},           {"W(2/5)", Rational(2, 5), 0},
        {"W(2/3)", Rational(2, 3), 1},      {"W(1/15)", Rational(1, 15), 1},
        {"W(2/3)", Rational(2, 3), -1},     {"W(1/15)", Rational(1, 15), -1},
    };
    // dual swaps the sign flavors and fixes the unsigned labels.
    std::vector<std::size_t> dual = {0, 1, 4, 5, 2, 3};
    const std::vector<ProductRow> rows = {
        {"W(2/5)", "W(2/5)", {"W(0)", "W(2/5)"}},
        {"W(2/5)", "W(2/3,+)", {"W(1/15,+)"}},
        {"W(2/5)", "W(1/15,+)", {"W(1/15,+)", "W(2/3,+)"}},
        {"W(2/5)", "W(2/3,-)", {"W(1/15,-)"}},
        {"W(2/5)", "W(1/15,-)", {"W(1/15,-)", "W(2/3,-)"}},
        {"W(2/3,+)", "W(2/3,+)", {"W(2/3,-)"}},
        {"W(2/3,+)", "W(1/15,+)", {"W(1/15,-)"}},
        {"W(2/3,+)", "W(2/3,-)", {"W(0)"}},
        {"W(2/3,+)", "W(1/15,-)", {"W(2/5)"}},
        {"W(1/15,+)", "W(1/15,+)", {"W(1/15,-)", "W(2/3,-)"}},
        {"W(1/15,+)", "W(2/3,-)", {"W(2/5)"}},
        {"W(1/15,+)", "W(1/15,-)", {"W(0)", "W(2/5)"}},
        {"W(2/3,-)", "W(2/3,-)", {"W(2/3,+)"}},
        {"W(2/3,-)", "W(1/15,-)", {"W(1/15,+)"}},
        {"W(1/15,-)", "W(1/15,-)", {"W(1/15,+)", "W(2/3,+)"}},
    };
    return make_ring("B_ext", std::move(basis), 0, std::move(dual), rows);
}

}  // namespace

const std::vector<std::string>& builtin_table_names() {
    static const std::vector<std::string> names = {"C_full", "A_sub", "B_ext", "sigma_fixed_sub"};
    return names;
}

FusionRing builtin_table(const std::string& name) {
    if (name == "C_full") return make_c_full();
    if (name == "A_sub") return subring_of_c("A_sub", {"0", "2/5", "7/5", "1/15", "3", "2/3"});
    if (name == "B_ext") return make_b_ext();
    if (name == "sigma_fixed_sub")
        return subring_of_c("sigma_fixed_sub", {"0", "3", "2/5", "7/5"});
    throw std::invalid_argument("unknown builtin table '" + name + "'");
}

}  // namespace potts::fusion
