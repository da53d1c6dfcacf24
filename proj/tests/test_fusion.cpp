// Unit tests for fusion rings: builtin tables, axiom checking, the
// Verlinde oracle, the bounds+evidence solver and the grading machinery.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "potts/fusion/builtin.hpp"
#include "potts/fusion/grading.hpp"
#include "potts/fusion/ring.hpp"
#include "potts/fusion/sandwich.hpp"
#include "potts/fusion/verlinde.hpp"

using namespace potts;
using namespace potts::fusion;

namespace {

/// The branching of the six extension labels into C_full, used by the
/// solver tests: W(0) -> 0 + 3, W(2/5) -> 2/5 + 7/5, W(2/3,±) -> 2/3,
/// W(1/15,±) -> 1/15.
Branching b_ext_branching(const FusionRing& base) {
    Branching br;
    br.components = {
        {base.index_of("0"), base.index_of("3")},
        {base.index_of("2/5"), base.index_of("7/5")},
        {base.index_of("2/3")},
        {base.index_of("1/15")},
        {base.index_of("2/3")},
        {base.index_of("1/15")},
    };
    return br;
}

/// The full evidence set, item ids 2.1-2.9 (sign pairs included).
EvidenceSet full_evidence(const FusionRing& ext) {
    auto i = [&](const char* s) { return ext.index_of(s); };
    EvidenceSet ev;
    ev.triples = {
        {i("W(0)"), i("W(0)"), i("W(0)"), "2.1"},
        {i("W(2/5)"), i("W(2/5)"), i("W(0)"), "2.1"},
        {i("W(2/3,+)"), i("W(2/3,-)"), i("W(0)"), "2.1"},
        {i("W(1/15,+)"), i("W(1/15,-)"), i("W(0)"), "2.1"},
        {i("W(2/5)"), i("W(2/5)"), i("W(2/5)"), "2.2"},
        {i("W(2/5)"), i("W(2/3,+)"), i("W(1/15,+)"), "2.3"},
        {i("W(2/5)"), i("W(1/15,+)"), i("W(1/15,+)"), "2.4"},
        {i("W(2/5)"), i("W(2/3,-)"), i("W(1/15,-)"), "2.5"},
        {i("W(2/5)"), i("W(1/15,-)"), i("W(1/15,-)"), "2.6"},
        {i("W(2/3,+)"), i("W(2/3,+)"), i("W(2/3,-)"), "2.7"},
        {i("W(2/3,-)"), i("W(2/3,-)"), i("W(2/3,+)"), "2.7"},
        {i("W(2/3,+)"), i("W(1/15,+)"), i("W(1/15,-)"), "2.8"},
        {i("W(1/15,+)"), i("W(1/15,+)"), i("W(2/3,-)"), "2.8"},
        {i("W(2/3,-)"), i("W(1/15,-)"), i("W(1/15,+)"), "2.8"},
        {i("W(1/15,-)"), i("W(1/15,-)"), i("W(2/3,+)"), "2.8"},
        {i("W(1/15,+)"), i("W(1/15,+)"), i("W(1/15,-)"), "2.9"},
        {i("W(1/15,-)"), i("W(1/15,-)"), i("W(1/15,+)"), "2.9"},
    };
    return ev;
}

}  // namespace

TEST_CASE("builtin tables exist and pass axioms") {
    for (const auto& name : builtin_table_names()) {
        const auto ring = builtin_table(name);
        CHECK(ring.check_axioms().all_pass());
    }
    CHECK_THROWS_AS(builtin_table("bogus"), std::invalid_argument);
    CHECK(builtin_table("C_full").size() == 10);
    CHECK(builtin_table("A_sub").size() == 6);
    CHECK(builtin_table("B_ext").size() == 6);
    CHECK(builtin_table("sigma_fixed_sub").size() == 4);
}

TEST_CASE("multiply on builtin tables") {
    const auto c = builtin_table("C_full");
    // 2/5 x 2/5 = 0 + 7/5
    auto prod = c.multiply(c.index_of("2/5"), c.index_of("2/5"));
    REQUIRE(prod.size() == 2);
    CHECK(c.label(prod[0].first).display() == "0");
    CHECK(c.label(prod[1].first).display() == "7/5");

    const auto b = builtin_table("B_ext");
    // W(2/3,+) x W(2/3,+) = W(2/3,-)
    prod = b.multiply(b.index_of("W(2/3,+)"), b.index_of("W(2/3,+)"));
    REQUIRE(prod.size() == 1);
    CHECK(b.label(prod[0].first).display() == "W(2/3,-)");
    // W(1/15,+) x W(1/15,-) = W(0) + W(2/5)
    prod = b.multiply(b.index_of("W(1/15,+)"), b.index_of("W(1/15,-)"));
    REQUIRE(prod.size() == 2);
    CHECK(b.label(prod[0].first).display() == "W(0)");
    CHECK(b.label(prod[1].first).display() == "W(2/5)");

    // identity x j == j on every table
    for (const auto& name : builtin_table_names()) {
        const auto ring = builtin_table(name);
        for (std::size_t j = 0; j < ring.size(); ++j) {
            auto p = ring.multiply(ring.identity_index(), j);
            REQUIRE(p.size() == 1);
            CHECK(p[0].first == j);
            CHECK(p[0].second == 1);
        }
    }

    // sigma_fixed_sub: 3 x 3 = 0
    const auto s = builtin_table("sigma_fixed_sub");
    prod = s.multiply(s.index_of("3"), s.index_of("3"));
    REQUIRE(prod.size() == 1);
    CHECK(s.label(prod[0].first).display() == "0");

    CHECK_THROWS_AS((void)c.index_of("5/7"), std::out_of_range);
}

TEST_CASE("C_full duals and B_ext duals") {
    const auto b = builtin_table("B_ext");
    CHECK(b.dual(b.index_of("W(2/3,+)")) == b.index_of("W(2/3,-)"));
    CHECK(b.dual(b.index_of("W(1/15,+)")) == b.index_of("W(1/15,-)"));
    CHECK(b.dual(b.index_of("W(0)")) == b.index_of("W(0)"));
    CHECK(b.dual(b.index_of("W(2/5)")) == b.index_of("W(2/5)"));
}

TEST_CASE("axiom checker catches mutations") {
    const auto c = builtin_table("C_full");
    // forcing N^{0}_{2/5,2/5} to 0 breaks associativity (and Frobenius)
    const auto broken = c.with_constant(c.index_of("2/5"), c.index_of("2/5"), 0, 0);
    const auto rep = broken.check_axioms();
    CHECK_FALSE(rep.all_pass());
    bool assoc_failed = false;
    for (const auto& r : rep.results)
        if (r.axiom == "associativity" && !r.pass) assoc_failed = true;
    CHECK(assoc_failed);

    // one-element trivial ring passes everything
    FusionRing trivial("trivial", {Label{"1", Rational(0), 0}}, 0, {0}, {1});
    CHECK(trivial.check_axioms().all_pass());
}

TEST_CASE("serialization round trip") {
    for (const auto& name : builtin_table_names()) {
        const auto ring = builtin_table(name);
        const auto text = ring.serialize();
        const auto back = FusionRing::parse(text);
        CHECK(back.same_table(ring));
        CHECK(back.serialize() == text);
    }
}

TEST_CASE("verlinde oracle") {
    // (5,6) reproduces the ten-label table
    const auto v56 = verlinde_minimal(5, 6);
    CHECK(v56.size() == 10);
    CHECK(v56.check_axioms().all_pass());
    CHECK(same_ring_by_weight(v56, builtin_table("C_full")));

    // (3,4): three labels with weights {0, 1/2, 1/16}
    const auto v34 = verlinde_minimal(3, 4);
    CHECK(v34.size() == 3);
    std::vector<Rational> weights;
    for (const auto& l : v34.basis()) weights.push_back(l.weight);
    std::sort(weights.begin(), weights.end());
    CHECK(weights == std::vector<Rational>{Rational(0), Rational(1, 16), Rational(1, 2)});

    // (2,3): the trivial one-label ring
    const auto v23 = verlinde_minimal(2, 3);
    CHECK(v23.size() == 1);

    CHECK_THROWS_AS(verlinde_minimal(4, 6), std::invalid_argument);
}

TEST_CASE("branching bounds hold for the builtin extension ring") {
    const auto ext = builtin_table("B_ext");
    const auto base = builtin_table("C_full");
    const auto br = b_ext_branching(base);
    CHECK(check_branching_bounds(ext, base, br).all_hold());

    // mutation: W(2/5) x W(2/3,+) -> W(0) has base bound 0
    const auto bad = ext.with_constant(ext.index_of("W(2/5)"), ext.index_of("W(2/3,+)"),
                                       ext.index_of("W(0)"), 1);
    CHECK_FALSE(check_branching_bounds(bad, base, br).all_hold());
}

TEST_CASE("extension ring derivation from bounds plus evidence") {
    const auto base = builtin_table("C_full");
    const auto builtin_ext = builtin_table("B_ext");
    const auto br = b_ext_branching(base);
    const auto ev = full_evidence(builtin_ext);

    auto result = determine_extension_ring("derived_B", builtin_ext.basis(), 0,
                                           {0, 1, 4, 5, 2, 3}, br, base, ev);
    REQUIRE(std::holds_alternative<FusionRing>(result));
    CHECK(std::get<FusionRing>(result).same_table(builtin_ext));
}

TEST_CASE("dropping evidence item 2.7 yields an ambiguity report") {
    const auto base = builtin_table("C_full");
    const auto builtin_ext = builtin_table("B_ext");
    const auto br = b_ext_branching(base);
    auto ev = full_evidence(builtin_ext);
    std::erase_if(ev.triples, [](const Evidence& e) { return e.note == "2.7"; });

    auto result = determine_extension_ring("derived_B", builtin_ext.basis(), 0,
                                           {0, 1, 4, 5, 2, 3}, br, base, ev);
    REQUIRE(std::holds_alternative<AmbiguityReport>(result));
    const auto& amb = std::get<AmbiguityReport>(result);
    // exactly the two W(2/3,±) x W(2/3,±) entries remain open
    CHECK(amb.entries.size() == 2);
    const auto p = builtin_ext.index_of("W(2/3,+)");
    const auto m = builtin_ext.index_of("W(2/3,-)");
    for (const auto& e : amb.entries) {
        CHECK(e.lower == 0);
        CHECK(e.upper == 1);
        REQUIRE(e.orbit.size() == 1);
        const auto& t = e.orbit[0];
        CHECK(((t == std::array<std::size_t, 3>{p, p, m}) ||
               (t == std::array<std::size_t, 3>{m, m, p})));
    }
}

TEST_CASE("contradictory evidence is rejected") {
    const auto base = builtin_table("C_full");
    const auto builtin_ext = builtin_table("B_ext");
    const auto br = b_ext_branching(base);
    EvidenceSet ev;
    // W(2/5) x W(2/3,+) -> W(0) contradicts the zero base bound
    ev.triples = {{builtin_ext.index_of("W(2/5)"), builtin_ext.index_of("W(2/3,+)"),
                   builtin_ext.index_of("W(0)"), "bogus"}};
    CHECK_THROWS_AS(determine_extension_ring("derived_B", builtin_ext.basis(), 0,
                                             {0, 1, 4, 5, 2, 3}, br, base, ev),
                    ContradictionError);
}

TEST_CASE("single-label ring with empty evidence is trivial") {
    FusionRing base("unit", {Label{"1", Rational(0), 0}}, 0, {0}, {1});
    Branching br;
    br.components = {{0}};
    auto result = determine_extension_ring("unit_ext", base.basis(), 0, {0}, br, base, {});
    REQUIRE(std::holds_alternative<FusionRing>(result));
    CHECK(std::get<FusionRing>(result).size() == 1);
}

TEST_CASE("grading checks on the extension table") {
    const auto b = builtin_table("B_ext");
    // (1, 1, w, w, w^2, w^2) on (W(0), W(2/5), W(2/3,+), W(1/15,+), W(2/3,-), W(1/15,-))
    const auto good = make_grading(b, 3, {0, 0, 1, 1, 2, 2});
    CHECK(check_grading(b, good));
    CHECK(good.order == 3);

    // swapped cube roots on the mixed-sign pattern fail
    const auto bad = make_grading(b, 3, {0, 0, 1, 2, 2, 1});
    std::string witness;
    CHECK_FALSE(check_grading(b, bad, &witness));
    CHECK(witness == "W(2/5) x W(2/3,+) -> W(1/15,+)");
}

TEST_CASE("sigma grading on the full table") {
    const auto c = builtin_table("C_full");
    std::vector<long> exps(c.size(), 0);
    for (const char* odd : {"1/8", "13/8", "1/40", "21/40"}) exps[c.index_of(odd)] = 1;
    const auto sigma = make_grading(c, 2, exps);
    CHECK(check_grading(c, sigma));
    CHECK(sigma.order == 2);
}

TEST_CASE("grading enumeration") {
    const auto b = builtin_table("B_ext");
    const auto gb = enumerate_gradings(b, 6);
    CHECK(gb.assignments.size() == 3);
    CHECK(gb.closed_under_product);
    CHECK(gb.cyclic);
    CHECK(gb.group_order == 3);

    const auto s = builtin_table("sigma_fixed_sub");
    const auto gs = enumerate_gradings(s, 6);
    CHECK(gs.assignments.size() == 2);
    CHECK(gs.closed_under_product);
    // the nontrivial one is the order-2 assignment with -1 on {3, 2/5}
    bool found_mu = false;
    for (const auto& g : gs.assignments) {
        if (g.order != 2) continue;
        found_mu = true;
        CHECK(g.values[s.index_of("0")].is_one());
        CHECK(g.values[s.index_of("7/5")].is_one());
        CHECK((-g.values[s.index_of("3")]).is_one());
        CHECK((-g.values[s.index_of("2/5")]).is_one());
    }
    CHECK(found_mu);

    // every enumerated grading passes check_grading; set closed under product
    const auto c = builtin_table("C_full");
    const auto gc = enumerate_gradings(c, 6);
    for (const auto& g : gc.assignments) CHECK(check_grading(*g.ring, g));
    CHECK(gc.closed_under_product);
    // sigma is among them
    bool has_sigma = false;
    for (const auto& g : gc.assignments) has_sigma = has_sigma || g.order == 2;
    CHECK(has_sigma);
}

TEST_CASE("automorphism order from decomposed spaces") {
    const auto b = builtin_table("B_ext");
    const auto g = make_grading(b, 3, {0, 0, 1, 1, 2, 2});

    DecomposedSpace with_omega;
    with_omega.components = {{b.index_of("W(0)"), 1}, {b.index_of("W(2/3,+)"), 2},
                             {b.index_of("W(2/3,-)"), 2}};
    CHECK(verify_order(build_automorphism(with_omega, g)) == 3);

    DecomposedSpace plain;
    plain.components = {{b.index_of("W(0)"), 5}, {b.index_of("W(2/5)"), 7}};
    CHECK(verify_order(build_automorphism(plain, g)) == 1);

    DecomposedSpace all;
    for (std::size_t i = 0; i < b.size(); ++i) all.components.push_back({i, -1});
    const auto trivial = make_grading(b, 1, {0, 0, 0, 0, 0, 0});
    CHECK(verify_order(build_automorphism(all, trivial)) == 1);
}
