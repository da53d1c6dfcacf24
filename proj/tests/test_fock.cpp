// Unit tests for the lattice Fock engine: Heisenberg and exponential
// modes, the general vertex mode, the Virasoro vector, the conformal
// triple, eigentriple classification and the evidence computations.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "potts/fock/conformal.hpp"
#include "potts/fock/evidence.hpp"
#include "potts/fock/lattice.hpp"
#include "potts/fock/vector.hpp"
#include "potts/fock/vertex.hpp"

using namespace potts;
using namespace potts::fock;

namespace {

const Lattice& LAT = sqrt2_a2();
const CosetVector XV = {Rational(1), Rational(0)};
const CosetVector YV = {Rational(0), Rational(1)};
const CosetVector A = {Rational(1), Rational(2)};  // x + 2y

FockVector ex(const Rational& a, const Rational& b) {
    return FockVector::exponential({a, b});
}

const FockVector VAC = FockVector::vacuum(2);

}  // namespace

TEST_CASE("lattice setup") {
    CHECK(LAT.inner(XV, XV) == 4);
    CHECK(LAT.inner(XV, YV) == -2);
    CHECK(LAT.inner(A, {Rational(1, 3), Rational(2, 3)}) == 4);
    CHECK(LAT.inner(A, {Rational(1, 3), Rational(-1, 3)}) == -2);
    CHECK(LAT.gram_inv[0][0] == Rational(1, 3));
    CHECK(LAT.gram_inv[0][1] == Rational(1, 6));
    CHECK_THROWS_AS(make_lattice({{1, 2}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_lattice({{1, 2}, {3, 4}}), std::invalid_argument);
}

TEST_CASE("heisenberg modes") {
    // a(0) e^b = <a,b> e^b
    CHECK(heisenberg_mode(LAT, A, 0, ex({1, 3}, {2, 3})) == ex({1, 3}, {2, 3}) * 4);
    // annihilation of an exponential-only state
    CHECK(heisenberg_mode(LAT, XV, 1, ex({1, 3}, {2, 3})).is_zero());
    // x(1) x(-1) e^0 = <x,x> e^0
    CHECK(heisenberg_mode(LAT, XV, 1, heisenberg_mode(LAT, XV, -1, VAC)) == VAC * 4);
    // a(0) eigenvalues on the three M^1 exponentials: 4, -2, -2
    CHECK(heisenberg_mode(LAT, A, 0, ex({1, 3}, {-1, 3})) == ex({1, 3}, {-1, 3}) * -2);
    CHECK(heisenberg_mode(LAT, A, 0, ex({-2, 3}, {-1, 3})) == ex({-2, 3}, {-1, 3}) * -2);
}

TEST_CASE("exp modes") {
    // (e^a)_{-1} e^0 = e^a
    CHECK(exp_mode(LAT, XV, -1, VAC) == ex(1, 0));
    // grade-keeping operator between cosets
    CHECK(exp_mode(LAT, {Rational(1, 3), Rational(2, 3)}, Rational(-1, 3),
                   ex({1, 3}, {-1, 3})) == ex({2, 3}, {1, 3}));
    // integer-power support only
    CHECK(exp_mode(LAT, XV, Rational(-1, 3), VAC).is_zero());
}

TEST_CASE("vertex modes") {
    const FockVector t2gen = heisenberg_mode(LAT, A, -1, VAC);
    CHECK(vertex_mode(LAT, t2gen, 1, t2gen) == VAC * 12);
    // degree-2 projection of t2gen_{-1} t2gen contains x(-1)^2 e^0 with
    // coefficient 1 (from the x component of x+2y)
    const FockVector r = vertex_mode(LAT, t2gen, -1, t2gen);
    CHECK(r.coeff(FockState{{Mode{0, 1}, Mode{0, 1}}, {Rational(0), Rational(0)}}) == 1);
    CHECK(r == heisenberg_mode(LAT, A, -1, t2gen));
    // vacuum identity
    CHECK(vertex_mode(LAT, VAC, -1, t2gen) == t2gen);
    CHECK(vertex_mode(LAT, VAC, 0, t2gen).is_zero());

    // degree bookkeeping: every term of u_n v has degree du + dv - n - 1
    const FockVector s = ex({1, 3}, {2, 3}) + ex({1, 3}, {-1, 3}) + ex({-2, 3}, {-1, 3});
    const FockVector p = vertex_mode(LAT, s, Rational(-1, 3), s);
    for (const auto& [st, c] : p.terms()) {
        (void)c;
        CHECK(st.degree(LAT) == Rational(2, 3));
    }
}

TEST_CASE("virasoro vector") {
    const FockVector omega = virasoro_vector(LAT);
    const auto [ok, c] = conformal_check(LAT, omega);
    CHECK(ok);
    CHECK(c == 2);
    // L(0) eigenvalues
    const FockVector x1 = heisenberg_mode(LAT, XV, -1, VAC);
    CHECK(vertex_mode(LAT, omega, 1, x1) == x1);
    CHECK(vertex_mode(LAT, omega, 1, ex(1, 0)) == ex(1, 0) * 2);
    // L(-1) 1 = 0
    CHECK(vertex_mode(LAT, omega, 0, VAC).is_zero());

    // rank-1 lattice <a,a> = 4: omega = (1/8) a(-1)^2 e^0, c = 1
    const Lattice r1 = make_lattice({{4}});
    const FockVector om1 = virasoro_vector(r1);
    const auto [ok1, c1] = conformal_check(r1, om1);
    CHECK(ok1);
    CHECK(c1 == 1);
    FockVector expect;
    expect.add_term(FockState{{Mode{0, 1}, Mode{0, 1}}, {Rational(0)}}, Rational(1, 8));
    CHECK(om1 == expect);

    // non-conformal inputs
    const FockVector xx = heisenberg_mode(LAT, XV, -1, heisenberg_mode(LAT, XV, -1, VAC));
    CHECK_FALSE(conformal_check(LAT, xx).first);
    CHECK_FALSE(conformal_check(LAT, FockVector{}).first);
}

TEST_CASE("griess product") {
    const FockVector omega = virasoro_vector(LAT);
    CHECK(griess_product(LAT, omega, omega) == omega * 2);
    FockVector e;
    e.add_scaled(heisenberg_mode(LAT, XV, -1, heisenberg_mode(LAT, XV, -1, VAC)),
                 Rational(1, 16));
    e.add_scaled(ex(1, 0) + ex(-1, 0), Rational(1, 4));
    CHECK(griess_product(LAT, e, e) == e * 2);
    CHECK(conformal_check(LAT, e) == std::make_pair(true, Rational(1, 2)));
    CHECK(griess_product(LAT, omega, e) == e * 2);
}

TEST_CASE("conformal triple search") {
    const auto triple = conformal_triple_search(LAT);
    CHECK(triple[0].central_charge == Rational(1, 2));
    CHECK(triple[1].central_charge == Rational(7, 10));
    CHECK(triple[2].central_charge == Rational(4, 5));
    const FockVector omega = virasoro_vector(LAT);
    CHECK(triple[0].vector + triple[1].vector + triple[2].vector == omega);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            CHECK(griess_product(LAT, triple[i].vector, triple[j].vector).is_zero());

    // the middle vector in closed form
    FockVector w2;
    w2.add_scaled(heisenberg_mode(LAT, XV, -1, heisenberg_mode(LAT, XV, -1, VAC)),
                  Rational(3, 80));
    w2.add_scaled(heisenberg_mode(LAT, XV, -1, heisenberg_mode(LAT, YV, -1, VAC)),
                  Rational(1, 10));
    w2.add_scaled(heisenberg_mode(LAT, YV, -1, heisenberg_mode(LAT, YV, -1, VAC)),
                  Rational(1, 10));
    w2.add_scaled(ex(1, 0) + ex(-1, 0), Rational(1, 20));
    w2.add_scaled(ex(0, 1) + ex(0, -1), Rational(-1, 5));
    w2.add_scaled(ex(1, 1) + ex(-1, -1), Rational(-1, 5));
    CHECK(triple[1].vector == w2);

    CHECK_THROWS_AS(conformal_triple_search(make_lattice({{2}})), std::invalid_argument);
}

TEST_CASE("eigentriple identification") {
    const auto triple = conformal_triple_search(LAT);
    const FockVector s = ex({1, 3}, {2, 3}) + ex({1, 3}, {-1, 3}) + ex({-2, 3}, {-1, 3});
    const FockVector d = ex({1, 3}, {2, 3}) * 2 - ex({1, 3}, {-1, 3}) - ex({-2, 3}, {-1, 3});
    auto hs = l0_eigentriple(LAT, s, triple);
    REQUIRE(hs.has_value());
    CHECK(*hs == std::array<Rational, 3>{Rational(0), Rational(0), Rational(2, 3)});
    auto hd = l0_eigentriple(LAT, d, triple);
    REQUIRE(hd.has_value());
    CHECK(*hd == std::array<Rational, 3>{Rational(0), Rational(3, 5), Rational(1, 15)});
    auto hv = l0_eigentriple(LAT, VAC, triple);
    REQUIRE(hv.has_value());
    CHECK(*hv == std::array<Rational, 3>{Rational(0), Rational(0), Rational(0)});
    CHECK_FALSE(l0_eigentriple(LAT, ex({1, 3}, {2, 3}) + ex({1, 3}, {-1, 3}), triple).has_value());

    CHECK(highest_weight_check(LAT, triple[2], s) == std::make_pair(true, Rational(2, 3)));
    CHECK(highest_weight_check(LAT, triple[0], s) == std::make_pair(true, Rational(0)));
    CHECK_FALSE(highest_weight_check(LAT, triple[2], virasoro_vector(LAT)).first);
}

TEST_CASE("graded bases") {
    CHECK(graded_basis(LAT, coset_rep(0), 0).size() == 1);
    CHECK(graded_basis(LAT, coset_rep(0), 1).size() == 2);
    CHECK(graded_basis(LAT, coset_rep(0), 2).size() == 11);
    CHECK(graded_basis(LAT, coset_rep(1), Rational(2, 3)).size() == 3);
    CHECK(graded_basis(LAT, coset_rep(2), Rational(2, 3)).size() == 3);
    CHECK(graded_basis(LAT, coset_rep(1), Rational(5, 3)).size() == 6);
    // degree not attained in the coset
    CHECK(graded_basis(LAT, coset_rep(1), Rational(1, 3)).empty());
}

TEST_CASE("fusion evidence projections") {
    const auto triple = conformal_triple_search(LAT);
    const FockVector t2gen = heisenberg_mode(LAT, A, -1, VAC);
    // item 2.2: target component (0, 3/5, 7/5)
    CHECK(fusion_evidence(LAT, t2gen, t2gen, -1,
                          {Rational(0), Rational(3, 5), Rational(7, 5)}, triple));
    // and the projection onto the vacuum-type component is also nonzero
    CHECK(fusion_evidence(LAT, t2gen, t2gen, -1, {Rational(0), Rational(2), Rational(0)},
                          triple));
    // but not onto an absent component
    CHECK_FALSE(fusion_evidence(LAT, t2gen, t2gen, -1,
                                {Rational(1, 2), Rational(3, 2), Rational(0)}, triple));

    const auto items = compute_evidence_items(LAT, triple);
    REQUIRE(items.size() == 9);
    for (const auto& item : items) CHECK(item.established);
    CHECK(items[6].id == "2.7");
    REQUIRE(items[6].triples.size() == 2);
    CHECK(items[6].triples[0] ==
          std::array<std::string, 3>{"W(2/3,+)", "W(2/3,+)", "W(2/3,-)"});
}

TEST_CASE("truncation errors") {
    const FockVector t2gen = heisenberg_mode(LAT, A, -1, VAC);
    CHECK_THROWS_AS(vertex_mode(LAT, t2gen, -1, t2gen, Rational(1, 3)), TruncationError);
    CHECK_THROWS_AS(exp_mode(LAT, XV, -1, VAC, Rational(1, 3)), TruncationError);
    // generous cutoff changes nothing
    CHECK(vertex_mode(LAT, t2gen, -1, t2gen, Rational(3)) == vertex_mode(LAT, t2gen, -1, t2gen));
    const auto triple = conformal_triple_search(LAT);
    CHECK_THROWS_AS(compute_evidence_items(LAT, triple, Rational(1, 3)), TruncationError);
}

TEST_CASE("skew symmetry spot check") {
    // u_n v = sum_i (-1)^{n+1+i} L(-1)^i / i! (v_{n+i} u)
    const FockVector omega = virasoro_vector(LAT);
    const FockVector u = heisenberg_mode(LAT, XV, -1, VAC);
    const FockVector v = heisenberg_mode(LAT, YV, -1, VAC);
    for (long n : {-2L, -1L, 0L, 1L}) {
        FockVector rhs;
        Rational fact = 1;
        for (long i = 0; i <= 3 - n; ++i) {
            if (i > 0) fact *= i;
            FockVector t = vertex_mode(LAT, v, Rational(n + i), u);
            for (long k = 0; k < i; ++k) t = vertex_mode(LAT, omega, 0, t);
            rhs.add_scaled(t, Rational(((n + 1 + i) % 2 == 0) ? 1 : -1) / fact);
        }
        CHECK(vertex_mode(LAT, u, Rational(n), v) == rhs);
    }
}

TEST_CASE("locality commutator spot check") {
    // [u_m, v_n] w = sum_{i>=0} binom(m,i) (u_i v)_{m+n-i} w for m >= 0
    const FockVector u = ex(1, 0);
    const FockVector v = ex(-1, 0);
    const FockVector w = heisenberg_mode(LAT, A, -1, FockVector::exponential({1, 0}));
    for (long m : {0L, 1L, 2L, 3L}) {
        for (long n : {-2L, -1L, 0L}) {
            const FockVector direct = vertex_mode(LAT, u, Rational(m), vertex_mode(LAT, v, Rational(n), w)) -
                                      vertex_mode(LAT, v, Rational(n), vertex_mode(LAT, u, Rational(m), w));
            FockVector expansion;
            Rational binom = 1;
            for (long i = 0; i <= m; ++i) {
                const FockVector uv = vertex_mode(LAT, u, Rational(i), v);
                if (!uv.is_zero())
                    expansion.add_scaled(vertex_mode(LAT, uv, Rational(m + n - i), w), binom);
                binom = binom * Rational(m - i) / Rational(i + 1);
            }
            CHECK(direct == expansion);
        }
    }
}

TEST_CASE("mode application respects the coset grading") {
    // M^1 x M^1 terms land on M^2 exponents
    const FockVector s = ex({1, 3}, {2, 3}) + ex({1, 3}, {-1, 3}) + ex({-2, 3}, {-1, 3});
    const FockVector p = vertex_mode(LAT, s, Rational(-1, 3), s);
    CHECK_FALSE(p.is_zero());
    for (const auto& [st, c] : p.terms()) {
        (void)c;
        const Rational f0 = st.exponent[0] - Rational(rational_floor(st.exponent[0]));
        CHECK(f0 == Rational(2, 3));
    }
}

TEST_CASE("denominators stay bounded at fixed cutoff") {
    const auto triple = conformal_triple_search(LAT);
    const FockVector s = ex({1, 3}, {2, 3}) + ex({1, 3}, {-1, 3}) + ex({-2, 3}, {-1, 3});
    const BigInt bound = BigInt(1) << 12;
    for (const FockVector& v :
         {vertex_mode(LAT, triple[1].vector, 1, s), vertex_mode(LAT, s, Rational(-4, 3), s),
          vertex_mode(LAT, triple[2].vector, 0, triple[2].vector)}) {
        for (const auto& [st, c] : v.terms()) {
            (void)st;
            BigInt d = den(c);
            for (const BigInt p : {BigInt(2), BigInt(3), BigInt(5)})
                while (d % p == 0) d /= p;
            CHECK(d == 1);
            CHECK(den(c) < bound * bound);
        }
    }
}

TEST_CASE("fock vector serialization") {
    FockVector v;
    v.add_term(FockState{{Mode{0, 1}, Mode{1, 2}}, {Rational(1, 3), Rational(2, 3)}},
               Rational(-3, 4));
    v.add_term(FockState{{}, {Rational(0), Rational(0)}}, Rational(5));
    const std::string text = v.serialize();
    CHECK(FockVector::parse(text) == v);
    CHECK(FockVector::parse("2  x(-1)x(-1)  exp(0,0)\n").coeff(
              FockState{{Mode{0, 1}, Mode{0, 1}}, {Rational(0), Rational(0)}}) == 2);
    CHECK_THROWS_AS(FockVector::parse("2  z(-1)  exp(0,0)\n"), std::invalid_argument);
    CHECK_THROWS_AS(FockVector::parse("oops\n"), std::invalid_argument);
}
