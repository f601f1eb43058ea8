#ifndef CCA_REDUCTION_HPP
#define CCA_REDUCTION_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cca/annihilator.hpp"
#include "cca/errors.hpp"
#include "cca/gin.hpp"
#include "cca/groebner.hpp"
#include "cca/hilbert.hpp"
#include "cca/monomial_ideal.hpp"

namespace cca {

// Top nonzero degree a(M) of a finite-length graded module, or -inf.
struct TopDegree {
    bool neg_inf = false;
    int value = 0;

    friend bool operator==(const TopDegree& x, const TopDegree& y) {
        return x.neg_inf == y.neg_inf && (x.neg_inf || x.value == y.value);
    }
};

namespace detail {

template <class K>
void validate_linear_forms(const std::vector<Poly<K>>& forms) {
    for (const auto& f : forms) {
        if (f.is_zero_poly() || f.degree() != 1 || !f.is_homogeneous())
            throw DomainError("reduction forms must be homogeneous of degree 1");
    }
}

} // namespace detail

// a(R/(I, forms)); fails with NotSopError when the quotient is not of
// finite length.
template <class K>
TopDegree top_degree(const std::vector<Poly<K>>& gens,
                     const std::vector<Poly<K>>& forms, TermOrder ord,
                     const BuchbergerOptions& bopts = {}) {
    if (gens.empty()) throw DomainError("no generators");
    detail::validate_linear_forms(forms);
    std::vector<Poly<K>> all = gens;
    all.insert(all.end(), forms.begin(), forms.end());
    MonomialIdeal in = initial_ideal(all, ord, bopts);
    TopDegreeValue t = top_nonzero_degree(in); // throws NotSopError if infinite
    return {t.neg_inf, t.value};
}

template <class K>
int dimension_of_quotient(const std::vector<Poly<K>>& gens, TermOrder ord,
                          const BuchbergerOptions& bopts = {}) {
    return initial_ideal(gens, ord, bopts).dimension();
}

// r_J(R/I) = a(R/(I, y_1..y_d)) for J spanned by the given linear forms.
template <class K>
int reduction_number(const std::vector<Poly<K>>& gens,
                     const std::vector<Poly<K>>& forms, TermOrder ord,
                     const BuchbergerOptions& bopts = {}) {
    int d = dimension_of_quotient(gens, ord, bopts);
    if (d < 0) throw DomainError("reduction number of the zero quotient");
    if (static_cast<int>(forms.size()) != d)
        throw DomainError("expected " + std::to_string(d) +
                          " linear forms (the dimension of R/I), got " +
                          std::to_string(forms.size()));
    TopDegree a = d == 0 ? top_degree(gens, {}, ord, bopts)
                         : top_degree(gens, forms, ord, bopts);
    if (a.neg_inf) throw DomainError("reduction number of the zero quotient");
    return a.value;
}

// (minimal generator degree of in(I)) - 1: a lower bound for r(R/I).
template <class K>
int reduction_lower_bound(const std::vector<Poly<K>>& gens, TermOrder ord,
                          const BuchbergerOptions& bopts = {}) {
    MonomialIdeal in = initial_ideal(gens, ord, bopts);
    if (in.is_zero()) throw DomainError("zero ideal has no generator degree");
    return in.min_generator_degree() - 1;
}

template <class K>
std::vector<Poly<K>> tail_variable_forms(int n, int d, TermOrder ord, const K& one) {
    std::vector<Poly<K>> forms;
    for (int i = n - d; i < n; ++i)
        forms.push_back(Poly<K>::variable(i, n, one, ord));
    return forms;
}

struct CanonicalReduction {
    int r = 0;       // common value for I and in(I)
    int dimension = 0;
};

// Reduction via the last d variables.  Requires the first d annihilator
// rows to be finite; computes the value for I and for in(I) along
// independent routes and insists they agree.
template <class K>
CanonicalReduction canonical_reduction_number(const std::vector<Poly<K>>& gens,
                                              TermOrder ord,
                                              const BuchbergerOptions& bopts = {}) {
    if (gens.empty()) throw DomainError("no generators");
    const int n = gens.front().nvars();
    MonomialIdeal in = initial_ideal(gens, ord, bopts);
    int d = in.dimension();
    if (d < 0) throw DomainError("reduction number of the zero quotient");
    K one = one_like(gens.front().leading_coeff());

    AnnihilatorTable at = annihilator_numbers_graded(gens, ord, -1, bopts);
    for (int i = 0; i < d; ++i)
        if (!at.finite[static_cast<size_t>(i)])
            throw HypothesisError(
                "annihilator row " + std::to_string(i) +
                " has infinite length: tail variables are not filter regular");

    std::vector<Poly<K>> forms = tail_variable_forms(n, d, ord, one);
    TopDegree r_ideal = top_degree(gens, forms, ord, bopts);

    std::vector<Poly<K>> in_gens;
    for (const auto& m : in.gens()) in_gens.push_back(Poly<K>::term(m, one, ord));
    TopDegree r_initial = top_degree(in_gens, forms, ord, bopts);

    if (!(r_ideal == r_initial))
        throw InternalError("tail reduction numbers of I and in(I) disagree");
    if (r_ideal.neg_inf) throw DomainError("reduction number of the zero quotient");
    return {r_ideal.value, d};
}

template <class K>
K from_long(long v, const K& like);

template <>
inline Rational from_long<Rational>(long v, const Rational&) {
    return Rational(v);
}

template <>
inline GFp from_long<GFp>(long v, const GFp& like) {
    return GFp(v, like.modulus());
}

struct SearchOptions {
    int budget = 100;
    uint64_t seed = 1;
    int grid = 1; // coefficients drawn from [-grid, grid]
    BuchbergerOptions buchberger;
};

template <class K>
struct SearchResult {
    int best_r = 0;
    std::vector<Poly<K>> best_forms;
    int evaluated = 0;  // candidates tried
    int sops_found = 0; // candidates that were systems of parameters
    int lower_bound = 0;
};

// Randomized search for small reduction numbers over forms
// y_i = x_{n-d+i} + sum_j a_{i,j} x_j with small integer coefficients.
// The tail-variable reduction is always candidate 0.
template <class K>
SearchResult<K> search_min_reduction(const std::vector<Poly<K>>& gens, TermOrder ord,
                                     const SearchOptions& opts = {}) {
    if (gens.empty()) throw DomainError("no generators");
    if (opts.budget < 1) throw DomainError("search budget must be positive");
    const int n = gens.front().nvars();
    MonomialIdeal in = initial_ideal(gens, ord, opts.buchberger);
    int d = in.dimension();
    if (d < 0) throw DomainError("reduction search on the zero quotient");
    K one = one_like(gens.front().leading_coeff());

    SearchResult<K> result;
    result.lower_bound = in.min_generator_degree() - 1;

    Rng rng(opts.seed);
    std::set<std::vector<long>> tried;
    std::optional<int> best;
    for (int attempt = 0; attempt < opts.budget; ++attempt) {
        std::vector<long> coeffs(static_cast<size_t>(d * (n - d)), 0);
        if (attempt > 0)
            for (auto& c : coeffs) c = rng.uniform(-opts.grid, opts.grid);
        if (!tried.insert(coeffs).second) continue;
        std::vector<Poly<K>> forms;
        for (int i = 0; i < d; ++i) {
            Poly<K> f = Poly<K>::variable(n - d + i, n, one, ord);
            for (int j = 0; j < n - d; ++j) {
                long c = coeffs[static_cast<size_t>(i * (n - d) + j)];
                if (c == 0) continue;
                f = f + Poly<K>::variable(j, n, from_long<K>(c, one), ord);
            }
            forms.push_back(std::move(f));
        }
        ++result.evaluated;
        try {
            TopDegree a = top_degree(gens, forms, ord, opts.buchberger);
            if (a.neg_inf) continue;
            ++result.sops_found;
            if (!best || a.value < *best) {
                best = a.value;
                result.best_forms = forms;
            }
        } catch (const NotSopError&) {
            continue;
        }
    }
    if (!best)
        throw SearchFailureError("no candidate within budget was a system of parameters");
    result.best_r = *best;
    return result;
}

} // namespace cca

#endif
