#ifndef CCA_TESTS_TESTUTIL_HPP
#define CCA_TESTS_TESTUTIL_HPP

#include <string>
#include <vector>

#include "cca/gin.hpp"
#include "cca/ideal_io.hpp"
#include "cca/monomial_ideal.hpp"
#include "cca/polynomial.hpp"

namespace testutil {

inline std::vector<std::string> vars(int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

// Polynomials over Q from a comma-separated expression string; variables are
// x1..xn unless names are given.
inline std::vector<cca::Poly<cca::Rational>> qpolys(
    int n, const std::string& exprs,
    cca::TermOrder ord = cca::TermOrder::Revlex,
    std::vector<std::string> names = {}) {
    if (names.empty()) names = vars(n);
    return cca::parse_expression_list<cca::Rational>(exprs, names, ord,
                                                     cca::Rational(1));
}

inline cca::Poly<cca::Rational> qpoly(int n, const std::string& expr,
                                      cca::TermOrder ord = cca::TermOrder::Revlex,
                                      std::vector<std::string> names = {}) {
    return qpolys(n, expr, ord, std::move(names)).front();
}

inline std::vector<cca::Poly<cca::GFp>> ppolys(
    int n, uint64_t p, const std::string& exprs,
    cca::TermOrder ord = cca::TermOrder::Revlex,
    std::vector<std::string> names = {}) {
    if (names.empty()) names = vars(n);
    return cca::parse_expression_list<cca::GFp>(exprs, names, ord, cca::GFp(1, p));
}

// Monomial ideal from a comma-separated monomial string.
inline cca::MonomialIdeal ideal(int n, const std::string& monomials) {
    if (monomials.empty()) return cca::MonomialIdeal::zero(n);
    std::vector<cca::Monomial> gens;
    for (const auto& p : qpolys(n, monomials)) gens.push_back(p.leading_monomial());
    return cca::MonomialIdeal(n, std::move(gens));
}

inline cca::Monomial mono(std::vector<int> exps) {
    return cca::Monomial(std::move(exps));
}

// Random monomial ideal: up to max_gens monomials of degree 1..max_deg.
inline cca::MonomialIdeal random_ideal(cca::Rng& rng, int n, int max_gens,
                                       int max_deg, int min_deg = 1) {
    std::vector<cca::Monomial> gens;
    int count = static_cast<int>(rng.uniform(1, max_gens));
    for (int g = 0; g < count; ++g) {
        int d = static_cast<int>(rng.uniform(min_deg, max_deg));
        std::vector<int> e(static_cast<size_t>(n), 0);
        for (int k = 0; k < d; ++k)
            ++e[static_cast<size_t>(rng.uniform(0, n - 1))];
        gens.emplace_back(e);
    }
    return cca::MonomialIdeal(n, std::move(gens));
}

// The eight cubics in Q[x1,x2,x3] used across several suites.
inline std::vector<cca::Poly<cca::Rational>> eight_cubics() {
    return qpolys(3,
                  "(2x1+x2)^3, (x2+2x3)^3, (3x1+x3)^3, (x1+3x3)^3, "
                  "(3x1+2x3)^3, (2x2-3x3)^3, (4x1+3x2)^3, (3x1-5x3)^3");
}

inline cca::MonomialIdeal eight_cubics_initial() {
    return ideal(3, "x1^3, x1^2x2, x2^3, x1^2x3, x1x3^2, x3^3, x2^2x3, x1x2^2");
}

inline cca::MonomialIdeal eight_cubics_gin() {
    return ideal(3,
                 "x1^3, x1^2x2, x1x2^2, x2^3, x1^2x3, x1x2x3, x2^2x3, "
                 "x1x3^2, x2x3^3, x3^4");
}

// Random homogeneous polynomial of the given degree with coefficients in
// [-range, range]; never returns zero.
inline cca::Poly<cca::Rational> random_form(cca::Rng& rng, int n, int degree,
                                            long range = 9) {
    using cca::Poly;
    using cca::Rational;
    for (;;) {
        Poly<Rational> f = Poly<Rational>::zero(n, cca::TermOrder::Revlex);
        for (const auto& m : cca::monomials_of_degree(n, degree)) {
            long c = rng.uniform(-range, range);
            if (c == 0) continue;
            f = f + Poly<Rational>::term(m, Rational(c), cca::TermOrder::Revlex);
        }
        if (!f.is_zero_poly()) return f;
    }
}

} // namespace testutil

#endif
