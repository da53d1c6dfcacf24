#pragma once

/// @file linalg.hpp
/// Small exact linear algebra kit over the rationals: reduced row echelon
/// form, nullspaces, linear solves and inverses.  Everything is dense and
/// deterministic; matrices in this project never exceed a few dozen rows.

#include "potts/rational.hpp"

#include <optional>
#include <vector>

namespace potts {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

/// In-place reduced row echelon form; returns the pivot column indices in
/// increasing order.  Deterministic: the first nonzero entry in scan order
/// is used as pivot.
std::vector<std::size_t> rref(Mat& m);

/// Basis of the right nullspace of m (vectors of length = #columns), in
/// the canonical rref-derived order (free variables in increasing column
/// order, each set to 1).
std::vector<Vec> nullspace(Mat m, std::size_t cols);

/// Solve a*x = b exactly; returns std::nullopt when inconsistent.  When the
/// system is underdetermined, free variables are set to 0 (the caller is
/// expected to check uniqueness via nullspace when it matters).
std::optional<Vec> solve(Mat a, Vec b);

/// Exact inverse; returns std::nullopt for singular input.
std::optional<Mat> inverse(const Mat& m);

/// a * v for a matrix and a column vector.
Vec mat_vec(const Mat& a, const Vec& v);

}  // namespace potts
