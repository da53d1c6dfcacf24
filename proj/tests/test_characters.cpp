// Unit tests for the character series and the branching solver.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "potts/chars/branch.hpp"
#include "potts/chars/series.hpp"
#include "potts/fock/evidence.hpp"

#include <algorithm>
#include <set>

using namespace potts;
using namespace potts::chars;
using fock::coset_rep;
using fock::sqrt2_a2;

TEST_CASE("theta series") {
    const auto& lat = sqrt2_a2();
    const auto t0 = theta_series(lat, coset_rep(0), 2);
    CHECK(t0.series.coeff(0) == 1);
    CHECK(t0.series.coeff(1) == 0);
    CHECK(t0.series.coeff(2) == 6);
    CHECK(t0.provenance == "lattice");

    const auto t1 = theta_series(lat, coset_rep(1), Rational(2, 3));
    CHECK(t1.series.leading_exponent() == Rational(2, 3));
    CHECK(t1.series.coeff(Rational(2, 3)) == 3);

    const auto tiny = theta_series(lat, coset_rep(0), 0);
    CHECK(tiny.series.coeff(0) == 1);
    CHECK(tiny.series.term_count() == 1);

    // theta(M^1) == theta(M^2) term by term (cosets swapped by negation)
    const auto ta = theta_series(lat, coset_rep(1), 6);
    const auto tb = theta_series(lat, coset_rep(2), 6);
    CHECK((ta.series - tb.series).is_zero());
}

TEST_CASE("heisenberg series") {
    const auto h2 = heisenberg_series(2, 4);
    CHECK(h2.series.coeff(0) == 1);
    CHECK(h2.series.coeff(1) == 2);
    CHECK(h2.series.coeff(2) == 5);
    const auto h0 = heisenberg_series(0, 4);
    CHECK(h0.series.coeff(0) == 1);
    CHECK(h0.series.term_count() == 1);
}

TEST_CASE("graded dimensions of the coset modules") {
    const auto& lat = sqrt2_a2();
    const auto m0 = graded_dim_module(lat, coset_rep(0), 6);
    const long m0_dims[] = {1, 2, 11, 22, 50, 96, 191};
    for (long k = 0; k <= 6; ++k) CHECK(m0.series.coeff(k) == m0_dims[k]);

    const auto m1 = graded_dim_module(lat, coset_rep(1), 6);
    const long m1_dims[] = {3, 6, 18, 36, 81, 150};
    for (long k = 0; k <= 5; ++k) CHECK(m1.series.coeff(Rational(2, 3) + k) == m1_dims[k]);
    CHECK(m1.series.coeff(Rational(1, 3)) == 0);
}

TEST_CASE("cross-oracle: series dimensions equal basis counts") {
    const auto& lat = sqrt2_a2();
    for (int g = 0; g < 3; ++g) {
        const auto gd = graded_dim_module(lat, coset_rep(g), 4);
        for (long k3 = 0; k3 <= 12; ++k3) {
            const Rational d(k3, 3);
            const auto basis = fock::graded_basis(lat, coset_rep(g), d);
            CHECK(gd.series.coeff(d) == Rational(static_cast<long>(basis.size())));
        }
    }
}

TEST_CASE("minimal model characters") {
    const auto chi0 = minimal_char(5, 6, 1, 1, 4);
    CHECK(chi0.series.leading_exponent() == 0);
    CHECK(chi0.series.coeff(0) == 1);
    CHECK(chi0.provenance == "minimal-model");

    // (6r-5s)^2 = 361 at (r,s) = (4,1): the weight-3 module
    CHECK(minimal_weight(5, 6, 4, 1) == 3);
    const auto chi3 = minimal_char(5, 6, 4, 1, 5);
    CHECK(chi3.series.leading_exponent() == 3);
    CHECK(chi3.series.coeff(3) == 1);

    // the ten leading exponents of (5,6) are exactly the known weights
    std::set<Rational> weights;
    for (long r = 1; r < 5; ++r)
        for (long s = 1; s < 6; ++s) weights.insert(minimal_weight(5, 6, r, s));
    const std::set<Rational> expected = {0,
                                         Rational(3),
                                         Rational(2, 5),
                                         Rational(7, 5),
                                         Rational(2, 3),
                                         Rational(1, 15),
                                         Rational(1, 8),
                                         Rational(13, 8),
                                         Rational(1, 40),
                                         Rational(21, 40)};
    CHECK(weights == expected);
    for (const auto& h : weights) {
        bool found = false;
        for (long r = 1; r < 5 && !found; ++r)
            for (long s = 1; s < 6 && !found; ++s)
                if (minimal_weight(5, 6, r, s) == h) {
                    CHECK(minimal_char(5, 6, r, s, 4).series.leading_exponent() == h);
                    found = true;
                }
    }

    // nonnegative integer coefficients across the three minimal series
    for (const auto [p, q] : {std::pair<long, long>{3, 4}, {4, 5}, {5, 6}}) {
        for (long r = 1; r < p; ++r)
            for (long s = 1; s < q; ++s) {
                const auto chi = minimal_char(p, q, r, s, 8);
                for (const auto& [key, c] : chi.series) {
                    (void)key;
                    CHECK(c >= 0);
                    CHECK(is_integer(c));
                }
            }
    }

    CHECK_THROWS_AS(minimal_char(5, 6, 5, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(minimal_char(5, 6, 0, 1, 4), std::invalid_argument);
}

TEST_CASE("branch solver on a single candidate") {
    const auto chi = minimal_char(5, 6, 1, 2, 6);
    const auto other = minimal_char(5, 6, 4, 1, 6);
    const auto res = branch_solver(chi, {other, chi});
    REQUIRE(res.success);
    CHECK(res.multiplicities == std::vector<long>{0, 1});
}

TEST_CASE("branching of the coset modules") {
    const auto& lat = sqrt2_a2();
    using Triple = std::array<Rational, 3>;

    const auto m0 = branch_module(lat, coset_rep(0), 6);
    REQUIRE(m0.success);
    REQUIRE(m0.components.size() == 8);
    const std::vector<Triple> expect0 = {
        {Rational(0), Rational(0), Rational(0)},          {Rational(0), Rational(0), Rational(3)},
        {Rational(0), Rational(3, 5), Rational(2, 5)},    {Rational(0), Rational(3, 5), Rational(7, 5)},
        {Rational(1, 2), Rational(1, 10), Rational(2, 5)}, {Rational(1, 2), Rational(1, 10), Rational(7, 5)},
        {Rational(1, 2), Rational(3, 2), Rational(0)},    {Rational(1, 2), Rational(3, 2), Rational(3)}};
    for (const auto& t : expect0) {
        bool found = false;
        for (const auto& [w, m] : m0.components)
            if (w == t) {
                found = true;
                CHECK(m == 1);
            }
        CHECK(found);
    }

    const auto m1 = branch_module(lat, coset_rep(1), 6);
    REQUIRE(m1.success);
    REQUIRE(m1.components.size() == 4);
    const std::vector<Triple> expect1 = {
        {Rational(0), Rational(0), Rational(2, 3)},
        {Rational(0), Rational(3, 5), Rational(1, 15)},
        {Rational(1, 2), Rational(1, 10), Rational(1, 15)},
        {Rational(1, 2), Rational(3, 2), Rational(2, 3)}};
    for (const auto& t : expect1) {
        bool found = false;
        for (const auto& [w, m] : m1.components)
            if (w == t) {
                found = true;
                CHECK(m == 1);
            }
        CHECK(found);
    }

    // recombination reproduces the target exactly up to the cutoff
    const auto target = graded_dim_module(lat, coset_rep(1), 6);
    const auto cands = triple_candidates(6);
    FracSeries recon(kDefaultScale, 6);
    for (const auto& [w, m] : m1.components) {
        for (const auto& c : cands)
            if (c.weights == w) recon = recon + c.chi.series.scaled(m);
    }
    CHECK((recon - target.series).is_zero());
}

TEST_CASE("candidate generation") {
    const auto cands = triple_candidates(2);
    CHECK(cands.size() == 108);
    std::set<std::array<Rational, 3>> uniq;
    for (const auto& c : cands) uniq.insert(c.weights);
    CHECK(uniq.size() == 108);
}
