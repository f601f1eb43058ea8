#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cca/annihilator.hpp"
#include "cca/gin.hpp"

#include "testutil.hpp"

using namespace cca;
using testutil::ideal;
using testutil::qpolys;

TEST_CASE("principal (x^2) in one variable") {
    AnnihilatorTable t = annihilator_numbers(ideal(1, "x1^2"));
    CHECK(t.at(0, 1) == 1);
    CHECK(t.at(1, 0) == 1);
    CHECK(t.alpha.size() == 2);
    CHECK(t.all_finite());
}

TEST_CASE("hand-computed table of (x^2, xy, y^3)") {
    AnnihilatorTable t = annihilator_numbers(ideal(2, "x1^2, x1x2, x2^3"));
    CHECK(t.at(0, 1) == 1);
    CHECK(t.at(0, 2) == 1);
    CHECK(t.at(1, 1) == 1);
    CHECK(t.at(2, 0) == 1);
    CHECK(t.alpha.size() == 4);
    CHECK(t.all_finite());
}

TEST_CASE("table of the eight-cubics initial ideal") {
    AnnihilatorTable t = annihilator_numbers(testutil::eight_cubics_initial());
    CHECK(t.all_finite());
    CHECK(t.at(0, 2) == 4);
    CHECK(t.at(0, 3) == 2);
    CHECK(t.at(1, 2) == 3);
    CHECK(t.at(2, 2) == 1);
    CHECK(t.at(3, 0) == 1);
}

TEST_CASE("non-borel example has an infinite first row") {
    AnnihilatorTable t = annihilator_numbers(ideal(3, "x1x3, x2x3, x3^2"));
    CHECK_FALSE(t.finite[0]);
    CHECK(t.first_infinite_row() == 0);
    CHECK_THROWS_AS(extremal_annihilators(t), HypothesisError);
}

TEST_CASE("borel type iff all rows finite, on a random corpus") {
    Rng rng(307);
    for (int iter = 0; iter < 150; ++iter) {
        auto J = testutil::random_ideal(rng, 3, 5, 3);
        AnnihilatorTable t = annihilator_numbers(J);
        CHECK(t.all_finite() == J.is_borel_type());
    }
}

TEST_CASE("colon route and exact-sequence route agree") {
    Rng rng(311);
    for (int iter = 0; iter < 120; ++iter) {
        auto J = testutil::random_ideal(rng, 3, 5, 3);
        AnnihilatorTable a = annihilator_numbers(J);
        AnnihilatorTable b = annihilator_numbers_colon(J);
        CHECK(a.finite == b.finite);
        if (a.all_finite()) {
            CHECK(a.alpha == b.alpha);
        } else {
            // compare the degrees both routes actually report
            int cut = std::min(a.cutoff, b.cutoff);
            for (int i = 0; i <= 3; ++i)
                for (int j = 0; j <= cut; ++j) CHECK(a.at(i, j) == b.at(i, j));
        }
    }
}

TEST_CASE("extremal corners of the eight-cubics initial ideal") {
    AnnihilatorTable t = annihilator_numbers(testutil::eight_cubics_initial());
    ExtremalSet s = extremal_annihilators(t);
    REQUIRE(s.size() == 1);
    CHECK(s[0].i == 0);
    CHECK(s[0].j == 3);
    CHECK(s[0].value == 2);
}

TEST_CASE("single nonzero alpha is extremal") {
    AnnihilatorTable t;
    t.nvars = 2;
    t.finite = {true, true};
    t.alpha[{1, 2}] = 3;
    ExtremalSet s = extremal_annihilators(t);
    REQUIRE(s.size() == 1);
    CHECK(s[0].value == 3);
}

TEST_CASE("binomial convention") {
    CHECK(binom_with_convention(-1, -1) == 1);
    CHECK(binom_with_convention(0, -1) == 0);
    CHECK(binom_with_convention(3, -1) == 0);
    CHECK(binom_with_convention(3, 1) == 3);
    CHECK(binom_with_convention(4, 2) == 6);
    CHECK(binom_with_convention(1, 2) == 0);
}

TEST_CASE("betti-annihilator correspondence on worked examples") {
    auto check_ideal = [](const MonomialIdeal& J) {
        BettiTable b = betti_koszul(J);
        AnnihilatorTable a = annihilator_numbers(J);
        CorrespondenceReport rep = correspondence_check(b, a);
        CHECK(rep.positions_match);
        CHECK(rep.values_match);
        CHECK(rep.bound_holds);
    };
    check_ideal(ideal(1, "x1^2"));
    check_ideal(ideal(2, "x1^2, x1x2, x2^3"));
    check_ideal(testutil::eight_cubics_initial());
    check_ideal(testutil::eight_cubics_gin());
    check_ideal(ideal(2, "x1^2, x2^2"));
}

TEST_CASE("correspondence holds on random borel-type ideals") {
    Rng rng(313);
    int done = 0;
    while (done < 40) {
        auto J = testutil::random_ideal(rng, 3, 5, 3);
        if (J.is_unit() || !J.is_borel_type()) continue;
        BettiTable b = betti_koszul(J);
        AnnihilatorTable a = annihilator_numbers(J);
        CorrespondenceReport rep = correspondence_check(b, a);
        CHECK(rep.positions_match);
        CHECK(rep.values_match);
        CHECK(rep.bound_holds);
        ++done;
    }
}

TEST_CASE("annihilator tables transfer to the initial ideal") {
    // monomial input: in(I) = I, tables trivially identical
    auto mono_gens = qpolys(2, "x1^2, x1x2");
    TableEqualityReport rep = annihilator_transfer_check(mono_gens, TermOrder::Revlex);
    CHECK(rep.hypothesis_ok);
    CHECK(rep.equal);
    // the eight cubics
    TableEqualityReport rep8 =
        annihilator_transfer_check(testutil::eight_cubics(), TermOrder::Revlex);
    CHECK(rep8.hypothesis_ok);
    CHECK(rep8.equal);
    // hypothesis violation is reported, not thrown
    auto bad = qpolys(3, "x1x3, x2x3, x3^2");
    TableEqualityReport repb = annihilator_transfer_check(bad, TermOrder::Revlex);
    CHECK_FALSE(repb.hypothesis_ok);
}

TEST_CASE("graded route matches the monomial route on the eight cubics") {
    AnnihilatorTable graded =
        annihilator_numbers_graded(testutil::eight_cubics(), TermOrder::Revlex);
    AnnihilatorTable mono = annihilator_numbers(testutil::eight_cubics_initial());
    CHECK(graded.all_finite());
    CHECK(graded.alpha == mono.alpha);
    CHECK(graded.finite == mono.finite);
}
