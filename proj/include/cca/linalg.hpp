#ifndef CCA_LINALG_HPP
#define CCA_LINALG_HPP

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "cca/errors.hpp"
#include "cca/field.hpp"

namespace cca {

using IntMatrix = std::vector<std::vector<mpz_class>>;
using RatMatrix = std::vector<std::vector<Rational>>;

// Fraction-free (Bareiss) elimination.  Entries stay integral: every
// intermediate value is a minor of the input, and the division by the
// previous pivot is exact.
inline long rank_bareiss(IntMatrix m) {
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    long rank = 0;
    mpz_class prev(1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) std::swap(m[piv], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                mpz_class num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
        ++rank;
    }
    return rank;
}

// Clears denominators row by row (rank is invariant), then runs Bareiss.
inline long rank_rational(const RatMatrix& m) {
    IntMatrix z(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        mpz_class l(1);
        for (const auto& q : m[i]) {
            mpz_class d = q.get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        z[i].reserve(m[i].size());
        for (const auto& q : m[i]) {
            mpz_class v = q.get_num() * (l / q.get_den());
            z[i].push_back(v);
        }
    }
    return rank_bareiss(std::move(z));
}

inline long rank_gfp(std::vector<std::vector<GFp>> m) {
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    long rank = 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c].value() == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) std::swap(m[piv], m[r]);
        GFp inv = m[r][c].inverse();
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].value() == 0) continue;
            GFp f = m[i][c] * inv;
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

inline Rational determinant(RatMatrix m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("determinant of a non-square matrix");
    Rational det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Rational inv = Rational(1) / m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] * inv;
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

} // namespace cca

#endif
