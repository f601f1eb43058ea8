#ifndef CCA_POLYNOMIAL_HPP
#define CCA_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cca/errors.hpp"
#include "cca/field.hpp"
#include "cca/monomial.hpp"
#include "cca/order.hpp"

namespace cca {

template <class K>
struct Term {
    Monomial mon;
    K coeff;
};

// Graded polynomial with exact coefficients.  Terms are kept strictly
// decreasing in the active term order; no zero coefficients, no duplicate
// monomials, empty term list == 0.
template <class K>
class Poly {
public:
    Poly(int nvars, TermOrder ord) : nvars_(nvars), ord_(ord) {
        if (nvars < 1) throw DomainError("ring needs at least one variable");
    }

    static Poly zero(int nvars, TermOrder ord) { return Poly(nvars, ord); }

    static Poly term(Monomial m, K c, TermOrder ord) {
        Poly p(m.nvars(), ord);
        if (!is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    static Poly variable(int i, int nvars, K c, TermOrder ord) {
        return term(Monomial::variable(i, nvars), std::move(c), ord);
    }

    static Poly constant(int nvars, K c, TermOrder ord) {
        return term(Monomial::one(nvars), std::move(c), ord);
    }

    int nvars() const { return nvars_; }
    TermOrder order() const { return ord_; }
    const std::vector<Term<K>>& terms() const { return terms_; }
    bool is_zero_poly() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    const Term<K>& leading_term() const {
        if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().mon; }
    const K& leading_coeff() const { return leading_term().coeff; }

    int degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mon.degree());
        return d; // -1 for the zero polynomial
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.front().mon.degree();
        for (const auto& t : terms_)
            if (t.mon.degree() != d) return false;
        return true;
    }

    Poly with_order(TermOrder ord) const {
        Poly r(nvars_, ord);
        r.terms_ = terms_;
        r.sort_terms();
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check(b);
        Poly r(a.nvars_, a.ord_);
        size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            auto c = compare(a.terms_[i].mon, b.terms_[j].mon, a.ord_);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                K s = a.terms_[i].coeff + b.terms_[j].coeff;
                if (!is_zero(s)) r.terms_.push_back({a.terms_[i].mon, std::move(s)});
                ++i;
                ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
        return r;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check(b);
        Poly r(a.nvars_, a.ord_);
        std::map<Monomial, K> acc;
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                Monomial m = ta.mon * tb.mon;
                K c = ta.coeff * tb.coeff;
                auto it = acc.find(m);
                if (it == acc.end()) {
                    acc.emplace(std::move(m), std::move(c));
                } else {
                    it->second += c;
                }
            }
        for (auto& [m, c] : acc)
            if (!is_zero(c)) r.terms_.push_back({m, c});
        r.sort_terms();
        return r;
    }

    Poly scaled(const K& c) const {
        Poly r(nvars_, ord_);
        if (is_zero(c)) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.coeff = t.coeff * c;
        return r;
    }

    // Multiply by a single term (used heavily by division).
    Poly times_term(const Monomial& m, const K& c) const {
        Poly r(nvars_, ord_);
        if (is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mon * m, t.coeff * c});
        return r; // order is multiplicative: sortedness is preserved
    }

    Poly pow(int e) const {
        if (e < 0) throw DomainError("negative polynomial power");
        Poly r = constant(nvars_, one_like_hint(), ord_);
        Poly base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    Poly monic() const {
        if (terms_.empty()) throw DomainError("normalizing the zero polynomial");
        const K& lc = terms_.front().coeff;
        Poly r(nvars_, ord_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mon, t.coeff / lc});
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
        for (size_t i = 0; i < a.terms_.size(); ++i) {
            if (a.terms_[i].mon != b.terms_[i].mon) return false;
            if (!(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
        }
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : terms_) {
            std::string c = to_string(t.coeff);
            bool neg = !c.empty() && c[0] == '-';
            if (neg) c = c.substr(1);
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            if (t.mon.is_one()) {
                out += c;
            } else if (c == "1") {
                out += t.mon.str(names);
            } else {
                out += c + "*" + t.mon.str(names);
            }
        }
        return out;
    }

private:
    K one_like_hint() const {
        if (!terms_.empty()) return one_like(terms_.front().coeff);
        return K(1); // works for Rational; GFp zero polys keep default modulus
    }
    void check(const Poly& other) const {
        if (nvars_ != other.nvars_)
            throw RingMismatchError("polynomials from rings of different size");
        if (ord_ != other.ord_)
            throw RingMismatchError("polynomials sorted under different term orders");
    }
    void sort_terms() {
        std::sort(terms_.begin(), terms_.end(),
                  [&](const Term<K>& a, const Term<K>& b) {
                      return compare(a.mon, b.mon, ord_) > 0;
                  });
    }

    int nvars_;
    TermOrder ord_;
    std::vector<Term<K>> terms_;
};

// GFp has no K(1) constructor without a modulus; specialize the hint there.
template <>
inline GFp Poly<GFp>::one_like_hint() const {
    if (!terms_.empty()) return one_like(terms_.front().coeff);
    return GFp(1, 2);
}

} // namespace cca

#endif
