#include "potts/linalg.hpp"

#include <cassert>

namespace potts {

std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        const Rational inv = Rational(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<Vec> nullspace(Mat m, std::size_t cols) {
    if (m.empty()) m.push_back(Vec(cols, Rational(0)));
    assert(m[0].size() == cols);
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(Mat a, Vec b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    const auto pivots = rref(a);
    // Inconsistent iff the augmented column is a pivot.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    Vec x(cols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
    return x;
}

std::optional<Mat> inverse(const Mat& m) {
    const std::size_t n = m.size();
    Mat aug(n, Vec(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    const auto pivots = rref(aug);
    if (pivots.size() != n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt;
    Mat inv(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

Vec mat_vec(const Mat& a, const Vec& v) {
    Vec out(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

}  // namespace potts
