#include "potts/chars/series.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace potts::chars {

namespace {

using fock::CosetVector;
using fock::Lattice;

long ceil_long(const Rational& r) {
    const BigInt f = rational_floor(r);
    return (Rational(f) == r ? f : f + 1).convert_to<long>();
}

}  // namespace

CharacterSeries theta_series(const Lattice& lat, const CosetVector& rep, const Rational& cutoff,
                             long scale) {
    FracSeries out(scale, cutoff);
    std::vector<long> box(lat.rank);
    for (std::size_t i = 0; i < lat.rank; ++i) {
        const double b = std::sqrt(2.0 * num(cutoff).convert_to<double>() /
                                   den(cutoff).convert_to<double>() *
                                   num(lat.gram_inv[i][i]).convert_to<double>() /
                                   den(lat.gram_inv[i][i]).convert_to<double>());
        box[i] = static_cast<long>(std::ceil(b)) + 1;
    }
    std::vector<long> offs(lat.rank, 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == lat.rank) {
            CosetVector v(lat.rank);
            for (std::size_t j = 0; j < lat.rank; ++j) v[j] = rep[j] + offs[j];
            const Rational e = lat.half_norm(v);
            if (e <= cutoff) out.add_term(e, 1);
            return;
        }
        for (long o = -box[i] - 1; o <= box[i]; ++o) {
            offs[i] = o;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return {std::move(out), "lattice"};
}

CharacterSeries heisenberg_series(std::size_t rank, const Rational& cutoff, long scale) {
    FracSeries out = series_one(scale, cutoff);
    const long top = ceil_long(cutoff);
    for (long n = 1; n <= top; ++n) {
        // (1 - q^n)^{-rank} = sum_k binom(rank+k-1, k) q^{nk}
        FracSeries factor(scale, cutoff);
        Rational binom = 1;
        for (long k = 0; Rational(n * k) <= cutoff; ++k) {
            factor.add_term(Rational(n * k), binom);
            binom = binom * Rational(static_cast<long>(rank) + k) / Rational(k + 1);
        }
        if (rank == 0) factor = series_one(scale, cutoff);
        out = out * factor;
    }
    return {std::move(out), "lattice"};
}

CharacterSeries graded_dim_module(const Lattice& lat, const CosetVector& rep,
                                  const Rational& cutoff, long scale) {
    auto theta = theta_series(lat, rep, cutoff, scale);
    auto heis = heisenberg_series(lat.rank, cutoff, scale);
    return {theta.series * heis.series, "product"};
}

Rational minimal_weight(long p, long q, long r, long s) {
    return Rational((q * r - p * s) * (q * r - p * s) - (p - q) * (p - q), 4 * p * q);
}

CharacterSeries minimal_char(long p, long q, long r, long s, const Rational& cutoff, long scale) {
    if (p < 2 || q < 2 || r < 1 || r >= p || s < 1 || s >= q)
        throw std::invalid_argument("minimal_char parameters out of range");
    FracSeries numer(scale, cutoff);
    // |n| bound: exponents grow like pqn^2, so a small window suffices
    long window = 2;
    while (Rational(4 * p * q * window * window) <
           cutoff + Rational((p - q) * (p - q), 4 * p * q) + 4 * p * q)
        ++window;
    for (long n = -window; n <= window; ++n) {
        const long a = 2 * p * q * n + q * r - p * s;
        const long b = 2 * p * q * n + q * r + p * s;
        const Rational e1 = Rational(a * a - (p - q) * (p - q), 4 * p * q);
        const Rational e2 = Rational(b * b - (p - q) * (p - q), 4 * p * q);
        if (e1 <= cutoff) numer.add_term(e1, 1);
        if (e2 <= cutoff) numer.add_term(e2, -1);
    }
    auto heis = heisenberg_series(1, cutoff, scale);
    return {numer * heis.series, "minimal-model"};
}

}  // namespace potts::chars
