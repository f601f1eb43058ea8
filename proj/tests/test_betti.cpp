#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cca/betti.hpp"
#include "cca/gin.hpp"
#include "cca/hilbert.hpp"

#include "testutil.hpp"

using namespace cca;
using testutil::ideal;
using testutil::qpolys;

static const char* kInitialDiagram =
    "        0    1    2\n"
    "--------------------\n"
    " 3:     8    9    2\n"
    " 4:     -    2    2\n"
    "--------------------\n"
    "Tot:    8   11    4\n";

static const char* kIdealDiagram =
    "        0    1    2\n"
    "--------------------\n"
    " 3:     8    9    1\n"
    " 4:     -    1    2\n"
    "--------------------\n"
    "Tot:    8   10    3\n";

static const char* kGinDiagram =
    "        0    1    2\n"
    "--------------------\n"
    " 3:     8   11    4\n"
    " 4:     2    4    2\n"
    "--------------------\n"
    "Tot:   10   15    6\n";

TEST_CASE("principal ideal (x^2) has the Koszul resolution") {
    BettiTable t = betti_koszul(ideal(1, "x1^2"));
    CHECK(t.at(0, 0) == 1);
    CHECK(t.at(1, 2) == 1);
    CHECK(t.entries.size() == 2);
    DerivedInvariants inv = derive_invariants(t, ideal(1, "x1^2").dimension());
    CHECK(inv.pd_quotient == 1);
    CHECK(inv.depth == 0);
    CHECK(inv.dim == 0);
    CHECK(inv.cohen_macaulay);
}

TEST_CASE("betti table of the eight-cubics initial ideal") {
    BettiTable t = to_ideal_subject(betti_koszul(testutil::eight_cubics_initial()));
    CHECK(t.at(0, 3) == 8);
    CHECK(t.at(1, 4) == 9);
    CHECK(t.at(2, 5) == 2);
    CHECK(t.at(1, 5) == 2);
    CHECK(t.at(2, 6) == 2);
    CHECK(t.entries.size() == 5);
    CHECK(t.total(0) == 8);
    CHECK(t.total(1) == 11);
    CHECK(t.total(2) == 4);
    CHECK(render_betti_diagram(t) == kInitialDiagram);
}

TEST_CASE("betti table of the eight-cubics gin") {
    BettiTable t = to_ideal_subject(betti_koszul(testutil::eight_cubics_gin()));
    CHECK(t.at(0, 3) == 8);
    CHECK(t.at(0, 4) == 2);
    CHECK(t.at(1, 4) == 11);
    CHECK(t.at(1, 5) == 4);
    CHECK(t.at(2, 5) == 4);
    CHECK(t.at(2, 6) == 2);
    CHECK(render_betti_diagram(t) == kGinDiagram);
}

TEST_CASE("graded betti table of the eight cubics themselves") {
    BettiTable t =
        to_ideal_subject(betti_of_graded(testutil::eight_cubics(), TermOrder::Revlex));
    CHECK(t.at(0, 3) == 8);
    CHECK(t.at(1, 4) == 9);
    CHECK(t.at(2, 5) == 1);
    CHECK(t.at(1, 5) == 1);
    CHECK(t.at(2, 6) == 2);
    CHECK(t.entries.size() == 5);
    CHECK(render_betti_diagram(t) == kIdealDiagram);
}

TEST_CASE("a complete intersection of two quadrics is Koszul") {
    auto gens = qpolys(2, "x1^2 - x2^2, x1x2");
    BettiTable t = to_ideal_subject(betti_of_graded(gens, TermOrder::Revlex));
    CHECK(t.at(0, 2) == 2);
    CHECK(t.at(1, 4) == 1);
    CHECK(t.entries.size() == 2);
}

TEST_CASE("oracle on (x^2, xy, y^3)") {
    BettiTable t = to_ideal_subject(betti_oracle(ideal(2, "x1^2, x1x2, x2^3")));
    CHECK(t.at(0, 2) == 2);
    CHECK(t.at(0, 3) == 1);
    CHECK(t.at(1, 3) == 1);
    CHECK(t.at(1, 4) == 1);
    CHECK(t.total(0) == 3);
    CHECK(t.total(1) == 2);
    CHECK(t.total(2) == 0);
}

TEST_CASE("oracle on a single monomial") {
    BettiTable t = to_ideal_subject(betti_oracle(ideal(3, "x1^2x3")));
    CHECK(t.entries.size() == 1);
    CHECK(t.at(0, 3) == 1);
}

TEST_CASE("oracle equals the koszul computation") {
    CHECK(betti_oracle(testutil::eight_cubics_initial()).entries ==
          betti_koszul(testutil::eight_cubics_initial()).entries);
    Rng rng(211);
    for (int iter = 0; iter < 40; ++iter) {
        auto I = testutil::random_ideal(rng, 3, 5, 4);
        if (I.is_unit()) continue;
        CHECK(betti_oracle(I).entries == betti_koszul(I).entries);
    }
}

TEST_CASE("euler characteristic equals the hilbert numerator") {
    auto check_euler = [](const MonomialIdeal& I) {
        CHECK(euler_numerator(betti_koszul(I)) == hilbert_numerator(I));
    };
    check_euler(testutil::eight_cubics_initial());
    check_euler(testutil::eight_cubics_gin());
    check_euler(ideal(2, "x1^2, x1x2, x2^3"));
    check_euler(ideal(3, "x1x3, x2x3, x3^2"));
    Rng rng(223);
    for (int iter = 0; iter < 25; ++iter) {
        auto I = testutil::random_ideal(rng, 3, 4, 3);
        if (I.is_unit()) continue;
        check_euler(I);
    }
    // graded case too
    auto gens = qpolys(3, "x1^2 - x2x3, x1x2 + x3^2");
    CHECK(euler_numerator(betti_of_graded(gens, TermOrder::Revlex)) ==
          hilbert_numerator(initial_ideal(gens, TermOrder::Revlex)));
}

TEST_CASE("derived invariants of the eight-cubics tables") {
    auto in = testutil::eight_cubics_initial();
    BettiTable t = betti_koszul(in);
    DerivedInvariants inv = derive_invariants(t, in.dimension());
    CHECK(inv.pd_quotient == 3);
    CHECK(inv.depth == 0);
    CHECK(inv.reg_quotient == 3);
    CHECK(inv.reg_ideal == 4);
    CHECK(inv.dim == 0);
    CHECK(inv.cohen_macaulay); // artinian

    BettiTable g = betti_of_graded(testutil::eight_cubics(), TermOrder::Revlex);
    DerivedInvariants ginv = derive_invariants(g, in.dimension());
    CHECK(ginv.pd_quotient == 3);
    CHECK(ginv.depth == 0);
    CHECK(ginv.reg_ideal == 4);
}

TEST_CASE("extremal betti corners") {
    // the eight-cubics tables have the single corner beta_{2,2+4} = 2
    BettiTable ideal_t =
        to_ideal_subject(betti_koszul(testutil::eight_cubics_initial()));
    ExtremalSet s = extremal_betti(ideal_t);
    REQUIRE(s.size() == 1);
    CHECK(s[0].i == 2);
    CHECK(s[0].j == 4);
    CHECK(s[0].value == 2);
    // same corner for I itself
    BettiTable graded =
        to_ideal_subject(betti_of_graded(testutil::eight_cubics(), TermOrder::Revlex));
    ExtremalSet sg = extremal_betti(graded);
    REQUIRE(sg.size() == 1);
    CHECK(sg[0] == s[0]);

    // single nonzero entry is extremal
    BettiTable single;
    single.nvars = 2;
    single.subject = Subject::Ideal;
    single.set(0, 3, 1);
    ExtremalSet ss = extremal_betti(single);
    REQUIRE(ss.size() == 1);
    CHECK(ss[0].value == 1);

    // cohen-macaulay with pure resolution: unique corner at (pd, pd+reg)
    BettiTable m2 = betti_koszul(ideal(2, "x1^2, x1x2, x2^2"));
    ExtremalSet sm = extremal_betti(m2);
    REQUIRE(sm.size() == 1);
    CHECK(sm[0].i == 2);
    CHECK(sm[0].j == 1);
    CHECK(sm[0].value == 2);
}

TEST_CASE("rigidity fails even when generator counts agree") {
    // mu(I) = mu(in I) = 8 yet the first syzygy counts differ (10 vs 11),
    // and the gin needs 10 generators
    BettiTable of_ideal =
        to_ideal_subject(betti_of_graded(testutil::eight_cubics(), TermOrder::Revlex));
    BettiTable of_initial =
        to_ideal_subject(betti_koszul(testutil::eight_cubics_initial()));
    BettiTable of_gin = to_ideal_subject(betti_koszul(testutil::eight_cubics_gin()));
    CHECK(of_ideal.total(0) == 8);
    CHECK(of_initial.total(0) == 8);
    CHECK(of_gin.total(0) == 10);
    CHECK(of_ideal.total(1) == 10);
    CHECK(of_initial.total(1) == 11);
}

TEST_CASE("upper semicontinuity under initial ideals") {
    Rng rng(227);
    int done = 0;
    while (done < 12) {
        std::vector<Poly<Rational>> gens;
        int count = static_cast<int>(rng.uniform(1, 3));
        for (int k = 0; k < count; ++k)
            gens.push_back(
                testutil::random_form(rng, 3, static_cast<int>(rng.uniform(1, 3))));
        MonomialIdeal in = initial_ideal(gens, TermOrder::Revlex);
        if (in.is_unit()) continue;
        BettiTable lower = betti_of_graded(gens, TermOrder::Revlex);
        BettiTable upper = betti_koszul(in);
        for (const auto& [k, v] : lower.entries)
            CHECK(v <= upper.at(k.first, k.second));
        ++done;
    }
}

TEST_CASE("prime-field ranks agree with rational ranks on torsion-free examples") {
    Rng rng(229);
    for (int iter = 0; iter < 10; ++iter) {
        auto I = testutil::random_ideal(rng, 3, 4, 3);
        if (I.is_unit()) continue;
        BettiTable rational = betti_koszul(I);
        CHECK(betti_koszul<GFp>(I, BettiOptions{}, GFp(1, 2)).entries ==
              rational.entries);
        CHECK(betti_koszul<GFp>(I, BettiOptions{}, GFp(1, 5)).entries ==
              rational.entries);
    }
}

TEST_CASE("subject conversions are inverse to each other") {
    BettiTable q = betti_koszul(testutil::eight_cubics_initial());
    CHECK(to_quotient_subject(to_ideal_subject(q)).entries == q.entries);
}

TEST_CASE("error paths and degree bounds") {
    CHECK_THROWS_AS(betti_koszul(MonomialIdeal::unit(2)), DomainError);
    BettiTable free_ring = betti_koszul(MonomialIdeal::zero(2));
    CHECK(free_ring.at(0, 0) == 1);
    CHECK(free_ring.entries.size() == 1);
    // an explicit degree cap truncates the table and flags it
    BettiOptions opts;
    opts.j_max = 3;
    BettiTable cut = betti_koszul(testutil::eight_cubics_initial(), opts);
    CHECK(cut.truncated);
    for (const auto& [k, v] : cut.entries) CHECK(k.second <= 3);
    BettiOptions wide;
    wide.j_max = 20;
    CHECK_FALSE(betti_koszul(testutil::eight_cubics_initial(), wide).truncated);
    CHECK_FALSE(betti_koszul(testutil::eight_cubics_initial()).truncated);
    // oracle cap
    BettiOptions tiny;
    tiny.oracle_cap = 2;
    CHECK_THROWS_AS(betti_oracle(testutil::eight_cubics_initial(), tiny),
                    ResourceLimitError);
}
