#ifndef CCA_HILBERT_HPP
#define CCA_HILBERT_HPP

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cca/errors.hpp"
#include "cca/monomial_ideal.hpp"

namespace cca {

// Integer polynomials in t, dense coefficient vector, index = degree.
using ZPoly = std::vector<mpz_class>;

inline void zpoly_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline ZPoly zpoly_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    zpoly_trim(r);
    return r;
}

inline ZPoly zpoly_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    zpoly_trim(r);
    return r;
}

inline ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    zpoly_trim(r);
    return r;
}

inline ZPoly zpoly_shift(const ZPoly& a, int k) {
    if (a.empty()) return {};
    ZPoly r(a.size() + static_cast<size_t>(k), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i + static_cast<size_t>(k)] = a[i];
    return r;
}

// Divides by (1-t); quotient coefficients are the prefix sums and the
// remainder is the value at t = 1.
inline std::pair<ZPoly, mpz_class> zpoly_div_one_minus_t(const ZPoly& p) {
    if (p.empty()) return {ZPoly{}, mpz_class(0)};
    ZPoly q(p.size() - 1, mpz_class(0));
    mpz_class run(0);
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        run += p[i];
        q[i] = run;
    }
    run += p.back();
    zpoly_trim(q);
    return {q, run};
}

// Hilbert series of R/I as numerator / (1-t)^n.
class HilbertSeries {
public:
    HilbertSeries(ZPoly numerator, int nvars)
        : num_(std::move(numerator)), nvars_(nvars) {
        zpoly_trim(num_);
    }

    const ZPoly& numerator() const { return num_; }
    int nvars() const { return nvars_; }

    // Series coefficient: dim_K (R/I)_d.
    mpz_class coefficient(int d) const {
        if (d < 0) return 0;
        mpz_class h(0);
        for (size_t k = 0; k < num_.size(); ++k) {
            int shift = d - static_cast<int>(k);
            if (shift < 0) continue;
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(),
                         static_cast<unsigned long>(nvars_ - 1 + shift),
                         static_cast<unsigned long>(nvars_ - 1));
            h += num_[k] * binom;
        }
        return h;
    }

private:
    ZPoly num_;
    int nvars_;
};

namespace detail {

inline ZPoly hilbert_numerator_rec(const MonomialIdeal& I,
                                   std::map<std::vector<std::vector<int>>, ZPoly>& memo) {
    if (I.is_zero()) return ZPoly{mpz_class(1)};
    if (I.is_unit()) return ZPoly{};

    std::vector<std::vector<int>> key;
    key.reserve(I.gens().size());
    for (const auto& g : I.gens()) key.push_back(g.exponents());
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // base case: pairwise coprime pure powers -> complete intersection
    bool all_pure = true;
    for (const auto& g : I.gens())
        if (g.support().size() != 1) {
            all_pure = false;
            break;
        }
    ZPoly result;
    if (all_pure) {
        result = ZPoly{mpz_class(1)};
        for (const auto& g : I.gens()) {
            ZPoly f(static_cast<size_t>(g.degree()) + 1, mpz_class(0));
            f[0] = 1;
            f.back() = -1;
            result = zpoly_mul(result, f);
        }
    } else {
        // pivot: most frequent variable among the mixed generators, taken at
        // the lower median of its positive exponents there
        int n = I.nvars();
        std::vector<int> freq(static_cast<size_t>(n), 0);
        for (const auto& g : I.gens()) {
            if (g.support().size() < 2) continue;
            for (int v : g.support()) ++freq[static_cast<size_t>(v)];
        }
        int var = static_cast<int>(std::max_element(freq.begin(), freq.end()) -
                                   freq.begin());
        std::vector<int> exps;
        for (const auto& g : I.gens())
            if (g.support().size() >= 2 && g[var] > 0) exps.push_back(g[var]);
        std::sort(exps.begin(), exps.end());
        int e = exps[(exps.size() - 1) / 2];
        Monomial pivot = Monomial::variable(var, n, e);

        ZPoly with = hilbert_numerator_rec(I.plus(pivot), memo);
        ZPoly without = hilbert_numerator_rec(I.colon(pivot), memo);
        result = zpoly_add(with, zpoly_shift(without, e));
    }
    memo.emplace(std::move(key), result);
    return result;
}

} // namespace detail

inline ZPoly hilbert_numerator(const MonomialIdeal& I) {
    std::map<std::vector<std::vector<int>>, ZPoly> memo;
    return detail::hilbert_numerator_rec(I, memo);
}

inline HilbertSeries hilbert_series(const MonomialIdeal& I) {
    return HilbertSeries(hilbert_numerator(I), I.nvars());
}

inline mpz_class hilbert_function(const MonomialIdeal& I, int d) {
    return hilbert_series(I).coefficient(d);
}

// Largest d with (R/I)_d != 0 for an Artinian quotient.  The numerator
// degree bounds the socle degree, so scanning that far suffices.
struct TopDegreeValue {
    bool neg_inf = false; // quotient is zero
    int value = 0;
};

inline TopDegreeValue top_nonzero_degree(const MonomialIdeal& I) {
    if (I.is_unit()) return {true, 0};
    if (!I.is_artinian()) throw NotSopError("quotient does not have finite length");
    HilbertSeries hs = hilbert_series(I);
    int bound = static_cast<int>(hs.numerator().size()) + I.nvars();
    int top = 0;
    for (int d = 0; d <= bound; ++d)
        if (hs.coefficient(d) != 0) top = d;
    return {false, top};
}

} // namespace cca

#endif
