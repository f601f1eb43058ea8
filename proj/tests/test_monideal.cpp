#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cca/gin.hpp"
#include "cca/hilbert.hpp"
#include "cca/monomial_ideal.hpp"

#include "testutil.hpp"

using namespace cca;
using testutil::ideal;
using testutil::mono;

static MonomialPrime prime(std::vector<int> vars) { return MonomialPrime{std::move(vars)}; }

TEST_CASE("minimalize removes divisible generators") {
    CHECK(ideal(1, "x1^2, x1^3") == ideal(1, "x1^2"));
    CHECK(ideal(3, "x1^3, x1x2^2, x1^3x2, x1x3^2") ==
          ideal(3, "x1^3, x1x2^2, x1x3^2"));
    CHECK(MonomialIdeal::zero(2).gens().empty());
}

TEST_CASE("colon by a monomial and by variable powers") {
    CHECK(ideal(2, "x1^2, x1x2").colon(mono({1, 0})) == ideal(2, "x1, x2"));
    // I : 1 = I
    auto I = ideal(3, "x1^2x3, x2^3");
    CHECK(I.colon(Monomial::one(3)) == I);
    // saturating x1 out of (x1^4, x1x2^3, x1x3^2) gives the unit ideal
    auto J = ideal(3, "x1^4, x1x2^3, x1x3^2");
    CHECK(J.colon_variable_power(0).is_unit());
    // x3^2 is a generator, so the x3-saturation is the whole ring
    CHECK(ideal(3, "x1x3, x2x3, x3^2").colon_variable_power(2).is_unit());
    CHECK(ideal(3, "x1x3, x2x3, x3^2").colon_variable_power(0) == ideal(3, "x3"));
}

TEST_CASE("saturation by primes") {
    // full saturation strips the embedded component
    CHECK(ideal(3, "x1x2, x1x3, x1^2").saturation() == ideal(3, "x1"));
    // a saturated ideal is a fixed point
    auto I = ideal(3, "x1");
    CHECK(I.saturation() == I);
    // the quasi-stable example saturates to (x3)
    CHECK(ideal(3, "x1x3, x2x3, x3^2").saturation() == ideal(3, "x3"));
}

TEST_CASE("membership and standard monomials") {
    auto I = ideal(2, "x1^2, x1x2, x2^3");
    CHECK(I.contains(mono({2, 0})));
    CHECK(I.contains(mono({2, 5})));
    CHECK_FALSE(I.contains(mono({0, 2})));
    CHECK(I.standard_monomials(2) == std::vector<Monomial>{mono({0, 2})});
    CHECK(I.standard_monomials(3).empty());
    CHECK(MonomialIdeal::unit(2).standard_monomials(0).empty());
    CHECK(MonomialIdeal::unit(2).standard_monomials(3).empty());
    CHECK(MonomialIdeal::zero(2).standard_monomials(2).size() == 3);
}

TEST_CASE("dimension via vertex covers") {
    CHECK(ideal(3, "x1^4, x1x2^3, x1x3^2").dimension() == 2);
    CHECK(MonomialIdeal::unit(3).dimension() == -1);
    CHECK(ideal(3, "x1x3, x2x3, x3^2").dimension() == 2);
    CHECK(MonomialIdeal::zero(3).dimension() == 3);
    CHECK(ideal(2, "x1^2, x2^3").dimension() == 0);
    CHECK(ideal(2, "x1^2, x2^3").is_artinian());
}

TEST_CASE("associated primes of the worked examples") {
    CHECK(ideal(3, "x1x3, x2x3, x3^2").associated_primes() ==
          std::vector<MonomialPrime>{prime({0, 1, 2}), prime({2})});
    CHECK(ideal(3, "x1x2, x1x3, x1^2").associated_primes() ==
          std::vector<MonomialPrime>{prime({0}), prime({0, 1, 2})});
    // the 8-generator initial ideal is primary to the irrelevant ideal
    CHECK(ideal(3, "x1^3, x1^2x2, x2^3, x1^2x3, x1x3^2, x3^3, x2^2x3, x1x2^2")
              .associated_primes() ==
          std::vector<MonomialPrime>{prime({0, 1, 2})});
    CHECK(MonomialIdeal::unit(3).associated_primes().empty());
}

TEST_CASE("irreducible decomposition is irredundant") {
    // (x1x2, x1x3) = (x1) cap (x2,x3); the spurious (x1,x2) leaf must be gone
    auto comps = ideal(3, "x1x2, x1x3").irreducible_decomposition();
    CHECK(comps.size() == 2);
    auto I = ideal(3, "x1x2, x1x3");
    auto inter = comps[0];
    for (size_t k = 1; k < comps.size(); ++k) inter = inter.intersect(comps[k]);
    CHECK(inter == I);
}

TEST_CASE("decomposition recovers the ideal on random inputs") {
    Rng rng(21);
    for (int iter = 0; iter < 60; ++iter) {
        auto I = testutil::random_ideal(rng, 3, 5, 4);
        auto comps = I.irreducible_decomposition();
        REQUIRE(!comps.empty());
        auto inter = comps[0];
        for (size_t k = 1; k < comps.size(); ++k) inter = inter.intersect(comps[k]);
        CHECK(inter == I);
        // irredundance: dropping any component changes the intersection
        if (comps.size() > 1) {
            for (size_t skip = 0; skip < comps.size(); ++skip) {
                MonomialIdeal rest = MonomialIdeal::zero(3);
                bool first = true;
                for (size_t k = 0; k < comps.size(); ++k) {
                    if (k == skip) continue;
                    rest = first ? comps[k] : rest.intersect(comps[k]);
                    first = false;
                }
                CHECK(rest != I);
            }
        }
    }
}

TEST_CASE("borel type classification") {
    CHECK(ideal(3, "x1^3, x1x2^2, x1^3x2, x1x3^2").is_borel_type());
    CHECK_FALSE(ideal(3, "x1x3, x2x3, x3^2").is_borel_type());
    CHECK(ideal(3, "x1").is_borel_type());
    // witness: the failing index and a separating monomial
    ClassificationWitness w;
    CHECK_FALSE(ideal(3, "x1x3, x2x3, x3^2").is_borel_type(&w));
    CHECK(w.index >= 1);
    auto I = ideal(3, "x1x3, x2x3, x3^2");
    auto lhs = I.colon_variable_power(w.index - 1);
    MonomialPrime p;
    for (int i = 0; i < w.index; ++i) p.vars.push_back(i);
    CHECK(lhs.contains(w.monomial));
    CHECK_FALSE(I.saturation_by_prime(p).contains(w.monomial));
}

TEST_CASE("strongly stable and stable") {
    CHECK_FALSE(ideal(3, "x1^3, x1x2^2, x1^3x2, x1x3^2").is_strongly_stable());
    CHECK(ideal(2, "x1^2, x1x2, x2^3").is_strongly_stable());
    CHECK(ideal(3, "x1").is_strongly_stable());
    CHECK(ideal(3, "x1").is_stable());
    // strongly stable implies stable and borel type
    Rng rng(31);
    for (int iter = 0; iter < 80; ++iter) {
        auto I = testutil::random_ideal(rng, 3, 4, 3);
        if (I.is_strongly_stable()) {
            CHECK(I.is_stable());
            CHECK(I.is_borel_type());
        }
    }
}

TEST_CASE("quasi stable classification") {
    CHECK(ideal(3, "x1x3, x2x3, x3^2").is_quasi_stable());
    CHECK_FALSE(ideal(3, "x1x2, x1x3, x1^2").is_quasi_stable());
    CHECK(ideal(2, "x1^2, x2^2").is_quasi_stable());
    CHECK(ideal(2, "x1^2, x2^2").is_borel_type());
}

TEST_CASE("exhaustive small family: all ideals on the degree <= 2 monomials") {
    // every subset of the nine monomials of degree 1..2 in three variables
    std::vector<Monomial> pool;
    for (int d = 1; d <= 2; ++d)
        for (const auto& m : monomials_of_degree(3, d)) pool.push_back(m);
    REQUIRE(pool.size() == 9);
    for (unsigned mask = 1; mask < (1u << 9); ++mask) {
        std::vector<Monomial> gens;
        for (int b = 0; b < 9; ++b)
            if (mask >> b & 1u) gens.push_back(pool[static_cast<size_t>(b)]);
        MonomialIdeal I(3, gens);
        CHECK(I.is_borel_type() == I.is_borel_type_via_ass());
        CHECK(I.is_quasi_stable() == I.is_quasi_stable_via_ass());
        CHECK(I.is_borel_type() == I.reversed().is_quasi_stable());
    }
}

TEST_CASE("colon and ass characterizations agree on a random corpus") {
    Rng rng(41);
    for (int iter = 0; iter < 500; ++iter) {
        auto I = testutil::random_ideal(rng, 3, 5, 3);
        CHECK(I.is_borel_type() == I.is_borel_type_via_ass());
        CHECK(I.is_quasi_stable() == I.is_quasi_stable_via_ass());
        // mirror duality
        CHECK(I.is_borel_type() == I.reversed().is_quasi_stable());
    }
}

TEST_CASE("finite length colon quotients detect relevant associated primes") {
    // (J : x_k)/J has finite length iff x_k avoids all relevant primes
    Rng rng(51);
    for (int iter = 0; iter < 60; ++iter) {
        auto J = testutil::random_ideal(rng, 3, 4, 3);
        if (J.is_unit()) continue;
        auto ass = J.associated_primes();
        for (int k = 0; k < 3; ++k) {
            auto colon = J.colon(Monomial::variable(k, 3));
            ZPoly diff = zpoly_sub(hilbert_numerator(J), hilbert_numerator(colon));
            bool finite = true;
            ZPoly q = diff;
            for (int v = 0; v < 3 && finite; ++v) {
                auto [quot, rem] = zpoly_div_one_minus_t(q);
                if (rem != 0) finite = false;
                q = quot;
            }
            bool in_relevant = false;
            for (const auto& p : ass) {
                if (static_cast<int>(p.vars.size()) == 3) continue; // irrelevant
                if (std::find(p.vars.begin(), p.vars.end(), k) != p.vars.end())
                    in_relevant = true;
            }
            CHECK(finite == !in_relevant);
        }
    }
}
