#ifndef CCA_ANNIHILATOR_HPP
#define CCA_ANNIHILATOR_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cca/betti.hpp"
#include "cca/errors.hpp"
#include "cca/groebner.hpp"
#include "cca/hilbert.hpp"
#include "cca/monomial_ideal.hpp"

namespace cca {

// Annihilator numbers of R/J along the sequence x_n, x_{n-1}, ..., x_1:
// row i < n is A_i = (0 : x_{n-i}) taken in R/(J, x_n..x_{n-i+1}),
// row n is the final quotient R/(J, x_n..x_1).
struct AnnihilatorTable {
    std::map<std::pair<int, int>, long long> alpha; // (row i, degree j)
    std::vector<bool> finite;                       // rows 0..n-1
    int nvars = 0;
    int cutoff = 0; // degrees reported for infinite rows

    long long at(int i, int j) const {
        auto it = alpha.find({i, j});
        return it == alpha.end() ? 0 : it->second;
    }
    bool all_finite() const {
        for (bool f : finite)
            if (!f) return false;
        return true;
    }
    int first_infinite_row() const {
        for (size_t i = 0; i < finite.size(); ++i)
            if (!finite[i]) return static_cast<int>(i);
        return -1;
    }
};

namespace detail {

// Series g / (t (1-t)^n): polynomial row if (1-t)^n divides g exactly.
struct RowExpansion {
    bool finite;
    std::vector<long long> coeffs; // degree -> alpha (finite: complete)
};

inline RowExpansion expand_row(const ZPoly& g, int nvars, int cutoff) {
    ZPoly q = g;
    bool finite = true;
    for (int k = 0; k < nvars && finite; ++k) {
        auto [quot, rem] = zpoly_div_one_minus_t(q);
        if (rem != 0)
            finite = false;
        else
            q = quot;
    }
    RowExpansion out;
    out.finite = finite;
    if (finite) {
        // remaining factor t: the constant term must vanish
        if (!q.empty() && q[0] != 0)
            throw InternalError("annihilator row series has a pole at t = 0");
        for (size_t d = 1; d < q.size(); ++d)
            out.coeffs.push_back(static_cast<long long>(q[d].get_si()));
    } else {
        HilbertSeries hs(g, nvars);
        for (int j = 0; j <= cutoff; ++j)
            out.coeffs.push_back(
                static_cast<long long>(hs.coefficient(j + 1).get_si()));
    }
    return out;
}

inline AnnihilatorTable table_from_numerators(const std::vector<ZPoly>& num,
                                              int nvars, int cutoff) {
    AnnihilatorTable t;
    t.nvars = nvars;
    t.cutoff = cutoff;
    t.finite.assign(static_cast<size_t>(nvars), true);
    for (int i = 0; i < nvars; ++i) {
        // row series: (N_{i+1} - (1-t) N_i) / (t (1-t)^n)
        ZPoly g = zpoly_sub(num[static_cast<size_t>(i) + 1],
                            zpoly_sub(num[static_cast<size_t>(i)],
                                      zpoly_shift(num[static_cast<size_t>(i)], 1)));
        RowExpansion row = expand_row(g, nvars, cutoff);
        t.finite[static_cast<size_t>(i)] = row.finite;
        for (size_t j = 0; j < row.coeffs.size(); ++j)
            if (row.coeffs[j] != 0)
                t.alpha[{i, static_cast<int>(j)}] = row.coeffs[j];
    }
    // row n is the Hilbert function of the last quotient itself
    HilbertSeries last(num[static_cast<size_t>(nvars)], nvars);
    int bound = static_cast<int>(num[static_cast<size_t>(nvars)].size()) + nvars;
    for (int j = 0; j <= bound; ++j) {
        mpz_class v = last.coefficient(j);
        if (v != 0) t.alpha[{nvars, j}] = static_cast<long long>(v.get_si());
    }
    return t;
}

} // namespace detail

// Hilbert-function route, the workhorse: exact for every row.
inline AnnihilatorTable annihilator_numbers(const MonomialIdeal& J, int cutoff = -1) {
    const int n = J.nvars();
    if (cutoff < 0) cutoff = J.max_generator_degree() * 2 + n + 2;
    std::vector<ZPoly> num;
    MonomialIdeal cur = J;
    num.push_back(hilbert_numerator(cur));
    for (int i = 0; i < n; ++i) {
        cur = cur.plus(Monomial::variable(n - 1 - i, n));
        num.push_back(hilbert_numerator(cur));
    }
    return detail::table_from_numerators(num, n, cutoff);
}

// Same table for a graded ideal: every Hilbert function is read off the
// initial ideal of the corresponding extension, each from its own
// Groebner basis run.
template <class K>
AnnihilatorTable annihilator_numbers_graded(const std::vector<Poly<K>>& gens,
                                            TermOrder ord, int cutoff = -1,
                                            const BuchbergerOptions& bopts = {}) {
    if (gens.empty()) throw DomainError("no generators");
    const int n = gens.front().nvars();
    K one = one_like(gens.front().leading_coeff());
    std::vector<ZPoly> num;
    std::vector<Poly<K>> cur = gens;
    num.push_back(hilbert_numerator(initial_ideal(cur, ord, bopts)));
    int maxdeg = 0;
    for (const auto& g : gens) maxdeg = std::max(maxdeg, g.degree());
    if (cutoff < 0) cutoff = maxdeg * 2 + n + 2;
    for (int i = 0; i < n; ++i) {
        cur.push_back(Poly<K>::variable(n - 1 - i, n, one, ord));
        num.push_back(hilbert_numerator(initial_ideal(cur, ord, bopts)));
    }
    return detail::table_from_numerators(num, n, cutoff);
}

// Independent route for monomial ideals: direct colon modules,
// alpha_{ij} = HF(R/J_i)(j) - HF(R/(J_i : x_{n-i}))(j).  Used as the
// cross-check in tests.
inline AnnihilatorTable annihilator_numbers_colon(const MonomialIdeal& J,
                                                  int cutoff = -1) {
    const int n = J.nvars();
    if (cutoff < 0) cutoff = J.max_generator_degree() * 2 + n + 2;
    AnnihilatorTable t;
    t.nvars = n;
    t.cutoff = cutoff;
    t.finite.assign(static_cast<size_t>(n), true);
    MonomialIdeal cur = J;
    for (int i = 0; i < n; ++i) {
        int var = n - 1 - i;
        MonomialIdeal colon = cur.colon(Monomial::variable(var, n));
        ZPoly g = zpoly_sub(hilbert_numerator(cur), hilbert_numerator(colon));
        ZPoly q = g;
        bool finite = true;
        for (int k = 0; k < n && finite; ++k) {
            auto [quot, rem] = zpoly_div_one_minus_t(q);
            if (rem != 0)
                finite = false;
            else
                q = quot;
        }
        t.finite[static_cast<size_t>(i)] = finite;
        if (finite) {
            for (size_t j = 0; j < q.size(); ++j)
                if (q[j] != 0)
                    t.alpha[{i, static_cast<int>(j)}] =
                        static_cast<long long>(q[j].get_si());
        } else {
            HilbertSeries hs(g, n);
            for (int j = 0; j <= cutoff; ++j) {
                mpz_class v = hs.coefficient(j);
                if (v != 0) t.alpha[{i, j}] = static_cast<long long>(v.get_si());
            }
        }
        cur = cur.plus(Monomial::variable(var, n));
    }
    HilbertSeries last = hilbert_series(cur);
    int bound = J.max_generator_degree() + n + 2;
    for (int j = 0; j <= bound; ++j) {
        mpz_class v = last.coefficient(j);
        if (v != 0) t.alpha[{n, j}] = static_cast<long long>(v.get_si());
    }
    return t;
}

// Corners of the annihilator diagram: alpha_{ij} != 0 with alpha_{kl} = 0
// for every other (k,l) with k <= i and l >= j.
inline ExtremalSet extremal_annihilators(const AnnihilatorTable& t) {
    if (!t.all_finite())
        throw HypothesisError(
            "annihilator row " + std::to_string(t.first_infinite_row()) +
            " has infinite length: the sequence is not filter regular");
    ExtremalSet out;
    for (const auto& [k, v] : t.alpha) {
        bool extremal = true;
        for (const auto& [o, w] : t.alpha) {
            if (o == k) continue;
            if (o.first <= k.first && o.second >= k.second) {
                extremal = false;
                break;
            }
        }
        if (extremal) out.push_back({k.first, k.second, v});
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline long long binom_with_convention(int top, int bottom) {
    if (bottom == -1) return top == -1 ? 1 : 0;
    if (bottom < -1 || top < 0 || top < bottom) return 0;
    long long r = 1;
    for (int k = 1; k <= bottom; ++k) r = r * (top - bottom + k) / k;
    return r;
}

struct CorrespondenceReport {
    bool positions_match = false;
    bool values_match = false;
    bool bound_holds = false;
    ExtremalSet betti_corners; // quotient subject, (i, j - i)
    ExtremalSet alpha_corners; // (row, degree)
    std::string detail;

    bool ok() const { return positions_match && values_match && bound_holds; }
};

// Checks the corner correspondence (i, d) <-> (n - i, d) with equal values
// and the entrywise binomial upper bound of the Betti numbers by the
// annihilator numbers.
inline CorrespondenceReport correspondence_check(const BettiTable& betti,
                                                 const AnnihilatorTable& at) {
    if (!at.all_finite())
        throw HypothesisError(
            "annihilator row " + std::to_string(at.first_infinite_row()) +
            " has infinite length: the sequence is not filter regular");
    BettiTable q = to_quotient_subject(betti);
    const int n = q.nvars;
    CorrespondenceReport rep;
    rep.betti_corners = extremal_betti(q);
    rep.alpha_corners = extremal_annihilators(at);

    ExtremalSet expected;
    for (const auto& e : rep.betti_corners)
        expected.push_back({n - e.i, e.j, e.value});
    std::sort(expected.begin(), expected.end());
    rep.positions_match = expected.size() == rep.alpha_corners.size();
    rep.values_match = rep.positions_match;
    if (rep.positions_match) {
        for (size_t k = 0; k < expected.size(); ++k) {
            if (expected[k].i != rep.alpha_corners[k].i ||
                expected[k].j != rep.alpha_corners[k].j)
                rep.positions_match = false;
            else if (expected[k].value != rep.alpha_corners[k].value)
                rep.values_match = false;
        }
        if (!rep.positions_match) rep.values_match = false;
    }

    rep.bound_holds = true;
    for (const auto& [k, v] : q.entries) {
        int i = k.first, j = k.second - k.first;
        long long bound = 0;
        for (int kk = 0; kk <= n - i; ++kk)
            bound += binom_with_convention(n - kk - 1, i - 1) * at.at(kk, j);
        if (v > bound) {
            rep.bound_holds = false;
            rep.detail += "beta_{" + std::to_string(i) + "," +
                          std::to_string(i + j) + "} = " + std::to_string(v) +
                          " exceeds bound " + std::to_string(bound) + "; ";
        }
    }
    return rep;
}

struct TableEqualityReport {
    bool hypothesis_ok = false; // all rows finite on both sides
    bool equal = false;
    std::vector<std::string> mismatches;
};

// Compares the annihilator table of a graded ideal with the one of its
// initial ideal; they must be identical whenever the rows are finite.
template <class K>
TableEqualityReport annihilator_transfer_check(const std::vector<Poly<K>>& gens,
                                               TermOrder ord,
                                               const BuchbergerOptions& bopts = {}) {
    AnnihilatorTable of_ideal = annihilator_numbers_graded(gens, ord, -1, bopts);
    MonomialIdeal in_ideal = initial_ideal(gens, ord, bopts);
    AnnihilatorTable of_initial = annihilator_numbers(in_ideal);

    TableEqualityReport rep;
    rep.hypothesis_ok = of_ideal.all_finite() && of_initial.all_finite();
    if (!rep.hypothesis_ok) {
        rep.mismatches.push_back("infinite annihilator length: hypothesis violated");
        return rep;
    }
    rep.equal = true;
    auto compare_into = [&](const AnnihilatorTable& a, const AnnihilatorTable& b) {
        for (const auto& [k, v] : a.alpha)
            if (b.at(k.first, k.second) != v) {
                rep.equal = false;
                rep.mismatches.push_back(
                    "alpha_{" + std::to_string(k.first) + "," +
                    std::to_string(k.second) + "}: " + std::to_string(v) + " vs " +
                    std::to_string(b.at(k.first, k.second)));
            }
    };
    compare_into(of_ideal, of_initial);
    compare_into(of_initial, of_ideal);
    return rep;
}

} // namespace cca

#endif
