#ifndef CCA_POMMARET_HPP
#define CCA_POMMARET_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cca/errors.hpp"
#include "cca/groebner.hpp"
#include "cca/monomial_ideal.hpp"
#include "cca/order.hpp"

namespace cca {

// cls(mu) = min{ i : mu_i != 0 }, 1-based like the variables.
inline int cls(const Monomial& m) {
    for (int i = 0; i < m.nvars(); ++i)
        if (m[i] > 0) return i + 1;
    throw DomainError("class of a constant monomial");
}

// Multiplicative variables x_1 .. x_cls, returned as 0-based indices.
inline std::vector<int> multiplicative_vars(const Monomial& m) {
    std::vector<int> out;
    int c = cls(m);
    out.reserve(static_cast<size_t>(c));
    for (int i = 0; i < c; ++i) out.push_back(i);
    return out;
}

// mu divides nu with the quotient supported in mu's multiplicative variables.
inline bool involutive_divides(const Monomial& mu, const Monomial& nu) {
    if (!mu.divides(nu)) return false;
    int c = cls(mu);
    for (int i = c; i < mu.nvars(); ++i)
        if (nu[i] > mu[i]) return false;
    return true;
}

struct InvolutiveBasis {
    int nvars = 0;
    std::vector<Monomial> elements; // sorted: degree, then revlex descending

    bool contains_involutive_divisor(const Monomial& m) const {
        for (const auto& h : elements)
            if (involutive_divides(h, m)) return true;
        return false;
    }
};

struct PommaretResult {
    bool complete = false;
    InvolutiveBasis basis;      // final basis, or the state at divergence
    int cap = 0;                // degree cap in force
    int stopped_at_degree = 0;  // first uncovered degree when diverging
    bool cap_certified = false; // cap >= the certified termination bound
};

// Monomial completion: multiply by nonmultiplicative variables until every
// product has an involutive divisor.  Candidates are processed by degree,
// ties broken by the reverse lexicographic order.
inline PommaretResult pommaret_complete(const MonomialIdeal& I, int degree_cap = -1) {
    if (I.is_zero()) throw DomainError("Pommaret basis of the zero ideal");
    if (I.is_unit()) throw DomainError("Pommaret basis of the unit ideal");
    const int n = I.nvars();
    const int certified = I.lcm_of_gens().degree(); // >= reg(I) >= basis degree
    int cap = degree_cap;
    if (cap < 0) cap = std::max(n + 2 * I.max_generator_degree(), certified);

    PommaretResult result;
    result.cap = cap;
    result.cap_certified = cap >= certified;

    std::set<std::vector<int>> have;
    std::vector<Monomial> basis = I.gens();
    for (const auto& g : basis) have.insert(g.exponents());

    for (;;) {
        std::optional<Monomial> smallest;
        for (const auto& h : basis) {
            int c = cls(h);
            for (int v = c; v < n; ++v) { // nonmultiplicative variables
                Monomial prod = h * Monomial::variable(v, n);
                if (have.count(prod.exponents())) continue;
                bool covered = false;
                for (const auto& b : basis)
                    if (involutive_divides(b, prod)) {
                        covered = true;
                        break;
                    }
                if (covered) continue;
                if (!smallest || prod.degree() < smallest->degree() ||
                    (prod.degree() == smallest->degree() &&
                     compare(prod, *smallest, TermOrder::Revlex) < 0))
                    smallest = prod;
            }
        }
        if (!smallest) break; // closed under nonmultiplicative products
        if (smallest->degree() > cap) {
            result.complete = false;
            result.stopped_at_degree = smallest->degree();
            result.basis = {n, basis};
            std::sort(result.basis.elements.begin(), result.basis.elements.end(),
                      [](const Monomial& a, const Monomial& b) {
                          if (a.degree() != b.degree()) return a.degree() < b.degree();
                          return compare(a, b, TermOrder::Revlex) > 0;
                      });
            if (result.cap_certified && I.is_quasi_stable())
                throw InternalError(
                    "completion crossed a certified cap on a quasi-stable ideal");
            return result;
        }
        basis.push_back(*smallest);
        have.insert(smallest->exponents());
    }

    result.complete = true;
    result.basis = {n, basis};
    std::sort(result.basis.elements.begin(), result.basis.elements.end(),
              [](const Monomial& a, const Monomial& b) {
                  if (a.degree() != b.degree()) return a.degree() < b.degree();
                  return compare(a, b, TermOrder::Revlex) > 0;
              });
    return result;
}

// Polynomial Pommaret basis from a reduced Groebner basis: every monomial
// h of the involutive basis of lt(I) lifts to q*g where h = q*lt(g).  The
// lifts have pairwise distinct leading terms forming that monomial basis.
template <class K>
std::vector<Poly<K>> lift_involutive_basis(const InvolutiveBasis& basis,
                                           const GroebnerBasis<K>& gb) {
    std::vector<Poly<K>> out;
    out.reserve(basis.elements.size());
    for (const auto& h : basis.elements) {
        const Poly<K>* source = nullptr;
        for (const auto& g : gb.gens)
            if (g.leading_monomial().divides(h)) {
                source = &g;
                break;
            }
        if (!source)
            throw InternalError("involutive basis element outside the leading ideal");
        K scale = one_like(source->leading_coeff()) / source->leading_coeff();
        out.push_back(source->times_term(h / source->leading_monomial(), scale));
    }
    return out;
}

// The unique involutive divisor of m in a complete basis, nullopt when m
// lies outside the ideal.  A missing or doubled divisor for a member of
// the ideal breaks the basis contract.
inline std::optional<Monomial> involutive_normal_form(const Monomial& m,
                                                      const InvolutiveBasis& basis) {
    std::vector<Monomial> divisors;
    bool member = false;
    for (const auto& h : basis.elements) {
        if (h.divides(m)) member = true;
        if (involutive_divides(h, m)) divisors.push_back(h);
    }
    if (divisors.size() > 1)
        throw BasisInvalidError("two involutive divisors of " + m.str());
    if (divisors.empty()) {
        if (member)
            throw BasisInvalidError("ideal member " + m.str() +
                                    " has no involutive divisor");
        return std::nullopt;
    }
    return divisors.front();
}

} // namespace cca

#endif
