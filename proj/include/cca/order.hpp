#ifndef CCA_ORDER_HPP
#define CCA_ORDER_HPP

#include <compare>
#include <string>

#include "cca/errors.hpp"
#include "cca/monomial.hpp"

namespace cca {

// Convention throughout: x_1 > x_2 > ... > x_n.
enum class TermOrder { Revlex, Lex, Deglex };

inline std::string to_string(TermOrder o) {
    switch (o) {
        case TermOrder::Revlex: return "revlex";
        case TermOrder::Lex: return "lex";
        case TermOrder::Deglex: return "deglex";
    }
    return "?";
}

inline TermOrder term_order_from_string(const std::string& s) {
    if (s == "revlex" || s == "degrevlex") return TermOrder::Revlex;
    if (s == "lex") return TermOrder::Lex;
    if (s == "deglex") return TermOrder::Deglex;
    throw DomainError("unknown term order: " + s);
}

inline std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
}

// Total order on monomials of a common ring.
inline std::strong_ordering compare(const Monomial& a, const Monomial& b,
                                    TermOrder ord) {
    if (a.nvars() != b.nvars())
        throw RingMismatchError("comparing monomials from different rings");
    switch (ord) {
        case TermOrder::Lex:
            return lex_compare(a, b);
        case TermOrder::Deglex: {
            if (a.degree() != b.degree()) return a.degree() <=> b.degree();
            return lex_compare(a, b);
        }
        case TermOrder::Revlex: {
            // degree first, then the last differing exponent: smaller wins
            if (a.degree() != b.degree()) return a.degree() <=> b.degree();
            for (int i = a.nvars() - 1; i >= 0; --i) {
                if (a[i] != b[i]) return b[i] <=> a[i];
            }
            return std::strong_ordering::equal;
        }
    }
    throw DomainError("unknown term order");
}

inline bool greater(const Monomial& a, const Monomial& b, TermOrder ord) {
    return compare(a, b, ord) > 0;
}

} // namespace cca

#endif
