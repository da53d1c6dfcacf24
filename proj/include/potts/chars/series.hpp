#pragma once

/// @file series.hpp
/// Graded-dimension series: lattice theta functions, Heisenberg partition
/// series, their product, and minimal-model characters.  All series are
/// unshifted graded dimensions (no q^{-c/24}).

#include "potts/fock/lattice.hpp"
#include "potts/series.hpp"

#include <string>

namespace potts::chars {

struct CharacterSeries {
    FracSeries series;
    std::string provenance;  // "lattice", "minimal-model" or "product"
};

// 240 = lcm of the exponent denominators across the three minimal series
// (16, 80, 15) and the coset gradings (3).
inline constexpr long kDefaultScale = 240;

/// Sum over lambda in rep + L with <lambda,lambda>/2 <= cutoff of
/// q^{<lambda,lambda>/2}, complete by the positive-definite box bound.
CharacterSeries theta_series(const fock::Lattice& lat, const fock::CosetVector& rep,
                             const Rational& cutoff, long scale = kDefaultScale);

/// prod_{n>=1} (1 - q^n)^{-rank}, truncated.
CharacterSeries heisenberg_series(std::size_t rank, const Rational& cutoff,
                                  long scale = kDefaultScale);

/// theta_series * heisenberg_series: the graded dimensions of the coset
/// module.
CharacterSeries graded_dim_module(const fock::Lattice& lat, const fock::CosetVector& rep,
                                  const Rational& cutoff, long scale = kDefaultScale);

/// Rocha-Caridi character of L(c_{p,q}, h_{r,s}) as an unshifted graded
/// dimension; requires 1 <= r < p, 1 <= s < q.
CharacterSeries minimal_char(long p, long q, long r, long s, const Rational& cutoff,
                             long scale = kDefaultScale);

/// h_{r,s} = ((qr - ps)^2 - (p-q)^2) / (4pq).
Rational minimal_weight(long p, long q, long r, long s);

}  // namespace potts::chars
