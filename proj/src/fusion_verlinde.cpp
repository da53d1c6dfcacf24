#include "potts/fusion/verlinde.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace potts::fusion {

FusionRing verlinde_minimal(unsigned p, unsigned q, double residual_gate) {
    if (p < 2 || p >= q || std::gcd(p, q) != 1)
        throw std::invalid_argument("verlinde_minimal requires 2 <= p < q with gcd(p,q) = 1");

    // Kac-table labels modulo the (r,s) ~ (p-r, q-s) identification.
    std::vector<std::pair<unsigned, unsigned>> labels;
    for (unsigned r = 1; r < p; ++r)
        for (unsigned s = 1; s < q; ++s) {
            const auto partner = std::make_pair(p - r, q - s);
            bool seen = false;
            for (const auto& l : labels) seen = seen || l == partner || l == std::make_pair(r, s);
            if (!seen) labels.emplace_back(r, s);
        }
    const std::size_t n = labels.size();

    // S_{(r,s),(r',s')} with the standard sign convention; all entries are
    // real, so no conjugation is needed in the Verlinde sum.
    std::vector<std::vector<long double>> S(n, std::vector<long double>(n));
    const long double norm = 2.0L * std::sqrt(2.0L / (static_cast<long double>(p) * q));
    const long double pi = 3.14159265358979323846264338327950288L;
    for (std::size_t i = 0; i < n; ++i) {
        const auto [r, s] = labels[i];
        for (std::size_t j = 0; j < n; ++j) {
            const auto [rp, sp] = labels[j];
            const int sign = ((1 + r * sp + rp * s) % 2 == 0) ? 1 : -1;
            S[i][j] = norm * sign * std::sin(pi * q * r * rp / p) * std::sin(pi * p * s * sp / q);
        }
    }

    std::size_t id = n;
    for (std::size_t i = 0; i < n; ++i)
        if (labels[i] == std::make_pair(1u, 1u)) id = i;

    std::vector<int> table(n * n * n, 0);
    auto flat = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };
    long double max_residual = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                long double v = 0;
                for (std::size_t m = 0; m < n; ++m) v += S[i][m] * S[j][m] * S[k][m] / S[id][m];
                const long long rounded = std::llround(static_cast<double>(v));
                max_residual = std::max(max_residual, std::fabs(v - rounded));
                if (rounded < 0)
                    throw VerlindeError("negative fusion number from Verlinde sum");
                table[flat(i, j, k)] = static_cast<int>(rounded);
            }
    if (max_residual > residual_gate)
        throw VerlindeError("Verlinde rounding residual " + std::to_string(static_cast<double>(max_residual)) +
                            " exceeds gate");

    std::vector<Label> basis;
    for (const auto& [r, s] : labels) {
        const long qr_ps = static_cast<long>(q) * r - static_cast<long>(p) * s;
        const long d = static_cast<long>(q) - static_cast<long>(p);
        const Rational h(qr_ps * qr_ps - d * d, 4L * p * q);
        basis.push_back(Label{to_string(h), h, 0});
    }
    std::vector<std::size_t> dual(n);
    for (std::size_t i = 0; i < n; ++i) dual[i] = i;  // minimal-model modules are self-dual

    FusionRing ring("verlinde(" + std::to_string(p) + "," + std::to_string(q) + ")",
                    std::move(basis), id, std::move(dual), std::move(table));
    if (!ring.check_axioms().all_pass())
        throw VerlindeError("rounded Verlinde table fails the exact axiom check");
    return ring;
}

bool same_ring_by_weight(const FusionRing& a, const FusionRing& b) {
    if (a.size() != b.size()) return false;
    const std::size_t n = a.size();
    // match labels by weight (weights must be unique on both sides)
    std::vector<std::size_t> to_b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (a.label(i).weight == b.label(j).weight) {
                if (to_b[i] != n) return false;
                to_b[i] = j;
            }
        if (to_b[i] == n) return false;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (a.N(i, j, k) != b.N(to_b[i], to_b[j], to_b[k])) return false;
    return true;
}

}  // namespace potts::fusion
