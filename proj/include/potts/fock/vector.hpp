#pragma once

/// @file vector.hpp
/// Canonical Fock states (multisets of creation modes on a lattice
/// exponential) and finitely supported rational linear combinations of
/// them.

#include "potts/fock/lattice.hpp"
#include "potts/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace potts::fock {

/// A creation operator a(-level) along a lattice basis axis.
struct Mode {
    int axis;    // index into the lattice basis
    long level;  // positive

    auto operator<=>(const Mode&) const = default;
};

/// A basis state: sorted creation modes applied to the exponential e^beta.
struct FockState {
    std::vector<Mode> modes;  // kept sorted
    CosetVector exponent;

    long total_level() const;
    Rational degree(const Lattice& lat) const;

    auto operator<=>(const FockState&) const = default;
};

/// Finitely supported rational combination of Fock states; zero
/// coefficients are never stored.
class FockVector {
  public:
    FockVector() = default;

    static FockVector exponential(CosetVector beta, Rational coeff = 1);
    static FockVector vacuum(std::size_t rank);

    void add_term(const FockState& st, const Rational& c);
    void add_scaled(const FockVector& v, const Rational& c);

    const std::map<FockState, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const FockState& st) const;

    FockVector operator+(const FockVector& o) const;
    FockVector operator-(const FockVector& o) const;
    FockVector operator*(const Rational& c) const;
    bool operator==(const FockVector& o) const = default;

    /// One term per line: `coeff  x(-1)y(-2)  exp(1/3,2/3)`; the axis
    /// names are x and y (rank-2 lattices only).
    std::string serialize() const;
    static FockVector parse(const std::string& text);

  private:
    std::map<FockState, Rational> terms_;
};

}  // namespace potts::fock
