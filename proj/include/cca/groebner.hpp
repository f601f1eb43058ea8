#ifndef CCA_GROEBNER_HPP
#define CCA_GROEBNER_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "cca/errors.hpp"
#include "cca/linalg.hpp"
#include "cca/monomial_ideal.hpp"
#include "cca/polynomial.hpp"

namespace cca {

struct BuchbergerOptions {
    size_t max_pairs = 200000; // processed-pair cap before giving up
    bool require_homogeneous = true;
};

template <class K>
struct GroebnerBasis {
    std::vector<Poly<K>> gens; // reduced: monic, auto-reduced, minimal
    TermOrder ord;
};

// Remainder of f on division by G: no term of the result is divisible by
// any leading term of G, and f - result lies in (G).
template <class K>
Poly<K> normal_form(Poly<K> f, const std::vector<Poly<K>>& G, TermOrder ord) {
    if (f.order() != ord) f = f.with_order(ord);
    Poly<K> remainder = Poly<K>::zero(f.nvars(), ord);
    Poly<K> work = std::move(f);
    while (!work.is_zero_poly()) {
        const auto& lt = work.leading_term();
        const Poly<K>* reducer = nullptr;
        for (const auto& g : G) {
            if (g.is_zero_poly()) continue;
            if (g.leading_monomial().divides(lt.mon)) {
                reducer = &g;
                break;
            }
        }
        if (reducer) {
            Monomial q = lt.mon / reducer->leading_monomial();
            K c = lt.coeff / reducer->leading_coeff();
            work = work - reducer->times_term(q, c);
        } else {
            remainder = remainder + Poly<K>::term(lt.mon, lt.coeff, ord);
            work = work - Poly<K>::term(lt.mon, lt.coeff, ord);
        }
    }
    return remainder;
}

template <class K>
Poly<K> s_polynomial(const Poly<K>& f, const Poly<K>& g) {
    Monomial l = f.leading_monomial().lcm(g.leading_monomial());
    K one = one_like(f.leading_coeff());
    Poly<K> a = f.times_term(l / f.leading_monomial(), one / f.leading_coeff());
    Poly<K> b = g.times_term(l / g.leading_monomial(), one / g.leading_coeff());
    return a - b;
}

namespace detail {

struct Pair {
    int i, j;
    Monomial lcm;
    int deg;
};

} // namespace detail

// Plain Buchberger with the coprimality and chain discard criteria and
// normal (minimal lcm degree first) selection.  Inputs must be homogeneous
// unless the option is relaxed for internal use.
template <class K>
GroebnerBasis<K> buchberger(std::vector<Poly<K>> input, TermOrder ord,
                            const BuchbergerOptions& opts = {}) {
    std::vector<Poly<K>> gens;
    for (auto& f : input) {
        if (f.is_zero_poly()) continue;
        if (opts.require_homogeneous && !f.is_homogeneous())
            throw DomainError("non-homogeneous generator: " + f.str());
        gens.push_back(f.order() == ord ? std::move(f) : f.with_order(ord));
    }
    if (gens.empty()) throw DomainError("no nonzero generators");

    std::vector<Poly<K>> basis;
    std::vector<detail::Pair> pending;
    auto push_pairs = [&](int idx) {
        for (int i = 0; i < idx; ++i) {
            Monomial l = basis[static_cast<size_t>(i)].leading_monomial().lcm(
                basis[static_cast<size_t>(idx)].leading_monomial());
            pending.push_back({i, idx, l, l.degree()});
        }
    };
    for (auto& f : gens) {
        Poly<K> r = normal_form(f, basis, ord);
        if (r.is_zero_poly()) continue;
        basis.push_back(r.monic());
        push_pairs(static_cast<int>(basis.size()) - 1);
    }

    auto in_pending = [&](int a, int b) {
        for (const auto& p : pending)
            if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return true;
        return false;
    };

    size_t processed = 0;
    while (!pending.empty()) {
        if (++processed > opts.max_pairs)
            throw ResourceLimitError("pair queue limit exceeded");
        // normal strategy: smallest lcm degree, ties by term order on lcm
        size_t best = 0;
        for (size_t k = 1; k < pending.size(); ++k) {
            if (pending[k].deg < pending[best].deg ||
                (pending[k].deg == pending[best].deg &&
                 compare(pending[k].lcm, pending[best].lcm, ord) < 0))
                best = k;
        }
        detail::Pair p = pending[best];
        pending.erase(pending.begin() + static_cast<long>(best));

        const Monomial& lt_i = basis[static_cast<size_t>(p.i)].leading_monomial();
        const Monomial& lt_j = basis[static_cast<size_t>(p.j)].leading_monomial();
        // coprimality criterion
        if (lt_i.coprime_with(lt_j)) continue;
        // chain criterion
        bool discard = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !discard; ++k) {
            if (k == p.i || k == p.j) continue;
            if (basis[static_cast<size_t>(k)].leading_monomial().divides(p.lcm) &&
                !in_pending(p.i, k) && !in_pending(p.j, k))
                discard = true;
        }
        if (discard) continue;

        Poly<K> s = s_polynomial(basis[static_cast<size_t>(p.i)],
                                 basis[static_cast<size_t>(p.j)]);
        Poly<K> r = normal_form(std::move(s), basis, ord);
        if (r.is_zero_poly()) continue;
        basis.push_back(r.monic());
        push_pairs(static_cast<int>(basis.size()) - 1);
    }

    // minimize: drop generators whose leading term another one divides
    std::vector<Poly<K>> minimal;
    for (size_t a = 0; a < basis.size(); ++a) {
        bool redundant = false;
        for (size_t b = 0; b < basis.size() && !redundant; ++b) {
            if (a == b) continue;
            const Monomial& la = basis[a].leading_monomial();
            const Monomial& lb = basis[b].leading_monomial();
            if (lb.divides(la) && (lb != la || b < a)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[a]);
    }
    // auto-reduce to the unique reduced basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t a = 0; a < minimal.size(); ++a) {
            std::vector<Poly<K>> others;
            for (size_t b = 0; b < minimal.size(); ++b)
                if (b != a) others.push_back(minimal[b]);
            Poly<K> r = normal_form(minimal[a], others, ord);
            if (r.is_zero_poly())
                throw InternalError("minimal basis element reduced to zero");
            r = r.monic();
            if (r != minimal[a]) {
                minimal[a] = r;
                changed = true;
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Poly<K>& x, const Poly<K>& y) {
        return compare(x.leading_monomial(), y.leading_monomial(), ord) < 0;
    });
    return {std::move(minimal), ord};
}

template <class K>
MonomialIdeal leading_ideal(const GroebnerBasis<K>& gb, int nvars) {
    std::vector<Monomial> lts;
    lts.reserve(gb.gens.size());
    for (const auto& g : gb.gens) lts.push_back(g.leading_monomial());
    return MonomialIdeal(nvars, std::move(lts));
}

template <class K>
MonomialIdeal initial_ideal(const std::vector<Poly<K>>& gens, TermOrder ord,
                            const BuchbergerOptions& opts = {}) {
    if (gens.empty()) throw DomainError("no generators");
    GroebnerBasis<K> gb = buchberger(gens, ord, opts);
    return leading_ideal(gb, gens.front().nvars());
}

// Invertible linear change of coordinates x_i -> sum_j a[i][j] x_j.
template <class K>
struct LinearChange {
    std::vector<std::vector<K>> a;

    int size() const { return static_cast<int>(a.size()); }
};

inline bool is_invertible(const LinearChange<Rational>& c) {
    return determinant(c.a) != 0;
}

template <class K>
std::vector<Poly<K>> apply_change(const std::vector<Poly<K>>& gens,
                                  const LinearChange<K>& change) {
    if (gens.empty()) return {};
    int n = gens.front().nvars();
    if (change.size() != n) throw RingMismatchError("change matrix size mismatch");
    if constexpr (std::is_same_v<K, Rational>) {
        if (!is_invertible(change))
            throw SingularChangeError("coordinate change matrix is singular");
    } else {
        std::vector<std::vector<GFp>> m = change.a;
        if (rank_gfp(m) != n)
            throw SingularChangeError("coordinate change matrix is singular");
    }
    TermOrder ord = gens.front().order();
    std::vector<Poly<K>> images;
    images.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Poly<K> img = Poly<K>::zero(n, ord);
        for (int j = 0; j < n; ++j) {
            if (is_zero(change.a[static_cast<size_t>(i)][static_cast<size_t>(j)]))
                continue;
            img = img + Poly<K>::variable(
                            j, n, change.a[static_cast<size_t>(i)][static_cast<size_t>(j)],
                            ord);
        }
        images.push_back(std::move(img));
    }
    std::vector<Poly<K>> out;
    out.reserve(gens.size());
    for (const auto& f : gens) {
        Poly<K> g = Poly<K>::zero(n, ord);
        for (const auto& t : f.terms()) {
            Poly<K> term = Poly<K>::constant(n, t.coeff, ord);
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < t.mon[i]; ++k)
                    term = term * images[static_cast<size_t>(i)];
            g = g + term;
        }
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace cca

#endif
