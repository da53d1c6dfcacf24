#include "potts/fock/lattice.hpp"

#include <stdexcept>

namespace potts::fock {

Rational Lattice::inner(const CosetVector& u, const CosetVector& v) const {
    Rational s = 0;
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) s += u[i] * gram[i][j] * v[j];
    return s;
}

Rational Lattice::half_norm(const CosetVector& v) const { return inner(v, v) / 2; }

namespace {

Rational leading_minor(const Mat& m, std::size_t k) {
    // determinant of the top-left k x k block by fraction-free expansion
    if (k == 1) return m[0][0];
    Mat sub(k, Vec(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[i][j];
    // Gaussian elimination determinant
    Rational det = 1;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        while (p < k && sub[p][c] == 0) ++p;
        if (p == k) return 0;
        if (p != c) {
            std::swap(sub[p], sub[c]);
            det = -det;
        }
        det *= sub[c][c];
        for (std::size_t r = c + 1; r < k; ++r) {
            const Rational f = sub[r][c] / sub[c][c];
            for (std::size_t j = c; j < k; ++j) sub[r][j] -= f * sub[c][j];
        }
    }
    return det;
}

}  // namespace

Lattice make_lattice(Mat gram) {
    const std::size_t n = gram.size();
    if (n == 0) throw std::invalid_argument("empty gram matrix");
    for (const auto& row : gram)
        if (row.size() != n) throw std::invalid_argument("gram matrix not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (gram[i][j] != gram[j][i]) throw std::invalid_argument("gram matrix not symmetric");
    for (std::size_t k = 1; k <= n; ++k)
        if (leading_minor(gram, k) <= 0)
            throw std::invalid_argument("gram matrix not positive definite");
    auto inv = inverse(gram);
    if (!inv) throw std::invalid_argument("gram matrix singular");
    return Lattice{n, std::move(gram), std::move(*inv)};
}

const Lattice& sqrt2_a2() {
    static const Lattice lat = make_lattice({{4, -2}, {-2, 4}});
    return lat;
}

CosetVector coset_rep(int g) {
    switch (((g % 3) + 3) % 3) {
        case 0: return {Rational(0), Rational(0)};
        case 1: return {Rational(1, 3), Rational(2, 3)};
        default: return {Rational(2, 3), Rational(1, 3)};
    }
}

}  // namespace potts::fock
