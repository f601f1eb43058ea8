#ifndef CCA_BETTI_HPP
#define CCA_BETTI_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cca/errors.hpp"
#include "cca/groebner.hpp"
#include "cca/hilbert.hpp"
#include "cca/linalg.hpp"
#include "cca/monomial_ideal.hpp"

namespace cca {

enum class Subject { Quotient, Ideal };

// Graded Betti numbers, keyed by (homological index i, internal degree j).
struct BettiTable {
    std::map<std::pair<int, int>, long long> entries;
    int nvars = 0;
    Subject subject = Subject::Quotient;
    bool truncated = false; // a user-supplied degree cap may hide entries

    long long at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    void set(int i, int j, long long v) {
        if (v != 0) entries[{i, j}] = v;
    }
    long long total(int i) const {
        long long t = 0;
        for (const auto& [k, v] : entries)
            if (k.first == i) t += v;
        return t;
    }
};

inline BettiTable to_ideal_subject(const BettiTable& q) {
    if (q.subject == Subject::Ideal) return q;
    BettiTable r;
    r.nvars = q.nvars;
    r.truncated = q.truncated;
    r.subject = Subject::Ideal;
    for (const auto& [k, v] : q.entries) {
        if (k.first == 0) continue; // beta_0(R/I) is the ring itself
        r.set(k.first - 1, k.second, v);
    }
    return r;
}

inline BettiTable to_quotient_subject(const BettiTable& t) {
    if (t.subject == Subject::Quotient) return t;
    BettiTable r;
    r.nvars = t.nvars;
    r.truncated = t.truncated;
    r.subject = Subject::Quotient;
    r.set(0, 0, 1);
    for (const auto& [k, v] : t.entries) r.set(k.first + 1, k.second, v);
    return r;
}

// One position of the (i, j - i) diagram together with its value.
struct ExtremalEntry {
    int i;
    int j; // diagram row: internal degree minus homological index
    long long value;

    friend bool operator==(const ExtremalEntry& a, const ExtremalEntry& b) {
        return a.i == b.i && a.j == b.j && a.value == b.value;
    }
    friend bool operator<(const ExtremalEntry& a, const ExtremalEntry& b) {
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    }
};
using ExtremalSet = std::vector<ExtremalEntry>;

// Corners of the Betti diagram: beta_{i,i+j} != 0 with nothing else weakly
// to the north-east, i.e. no nonzero beta_{k,k+l} with k >= i, l >= j.
inline ExtremalSet extremal_betti(const BettiTable& t) {
    std::vector<ExtremalEntry> nonzero;
    for (const auto& [k, v] : t.entries)
        nonzero.push_back({k.first, k.second - k.first, v});
    ExtremalSet out;
    for (const auto& e : nonzero) {
        bool extremal = true;
        for (const auto& o : nonzero) {
            if (o.i == e.i && o.j == e.j) continue;
            if (o.i >= e.i && o.j >= e.j) {
                extremal = false;
                break;
            }
        }
        if (extremal) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct DerivedInvariants {
    int pd_quotient = 0;   // pd(R/I)
    int pd_ideal = 0;      // pd(I) = pd(R/I) - 1
    int depth = 0;         // depth(R/I) = n - pd(R/I)
    int reg_quotient = 0;  // reg(R/I)
    int reg_ideal = 0;     // reg(I) = reg(R/I) + 1
    int dim = 0;           // dim(R/I)
    bool cohen_macaulay = false;
};

inline DerivedInvariants derive_invariants(const BettiTable& table, int dim) {
    BettiTable q = to_quotient_subject(table);
    DerivedInvariants inv;
    inv.dim = dim;
    for (const auto& [k, v] : q.entries) {
        inv.pd_quotient = std::max(inv.pd_quotient, k.first);
        inv.reg_quotient = std::max(inv.reg_quotient, k.second - k.first);
    }
    inv.pd_ideal = std::max(inv.pd_quotient - 1, 0);
    inv.depth = q.nvars - inv.pd_quotient;
    inv.reg_ideal = inv.reg_quotient + 1;
    inv.cohen_macaulay = (inv.depth == inv.dim);
    return inv;
}

// Alternating column sums of a quotient-subject table:
// sum_{i,j} (-1)^i beta_{ij} t^j, which must equal the Hilbert numerator.
inline ZPoly euler_numerator(const BettiTable& table) {
    BettiTable q = to_quotient_subject(table);
    ZPoly p;
    for (const auto& [k, v] : q.entries) {
        if (p.size() <= static_cast<size_t>(k.second))
            p.resize(static_cast<size_t>(k.second) + 1, mpz_class(0));
        mpz_class term(static_cast<long>(v));
        if (k.first % 2) term = -term;
        p[static_cast<size_t>(k.second)] += term;
    }
    zpoly_trim(p);
    return p;
}

// ---------------------------------------------------------------------------
// Koszul strand machinery
// ---------------------------------------------------------------------------

namespace detail {

// Degreewise description of R/I: a monomial basis per degree and the
// multiplication-by-variable maps expressed in those bases.
template <class K>
struct DegreewiseAlgebra {
    int nvars = 0;
    std::vector<std::vector<Monomial>> bases; // [d] -> basis of (R/I)_d
    std::vector<std::map<Monomial, int>> index;
    // (variable l, degree d, basis position k) -> sparse column in degree d+1
    std::function<std::vector<std::pair<int, K>>(int, int, int)> mult;

    int dim(int d) const {
        if (d < 0 || d >= static_cast<int>(bases.size())) return 0;
        return static_cast<int>(bases[static_cast<size_t>(d)].size());
    }
};

inline std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

template <class K>
long rank_of(const std::vector<std::vector<K>>& m) {
    if (m.empty() || m[0].empty()) return 0;
    if constexpr (std::is_same_v<K, Rational>) {
        return rank_rational(m);
    } else {
        return rank_gfp(m);
    }
}

// Homology ranks of the strand of internal degree j of Koszul(x_1..x_n) (x) A.
template <class K>
std::vector<long long> strand_homology(const DegreewiseAlgebra<K>& alg, int j,
                                       const K& one) {
    const int n = alg.nvars;
    const int top = std::min(n, j);
    // chain dimensions and subset tables per homological index
    std::vector<std::vector<std::vector<int>>> subsets(static_cast<size_t>(top) + 1);
    std::vector<std::map<std::vector<int>, int>> subset_index(static_cast<size_t>(top) + 1);
    std::vector<long> dims(static_cast<size_t>(top) + 1, 0);
    for (int i = 0; i <= top; ++i) {
        subsets[static_cast<size_t>(i)] = subsets_of_size(n, i);
        for (size_t s = 0; s < subsets[static_cast<size_t>(i)].size(); ++s)
            subset_index[static_cast<size_t>(i)][subsets[static_cast<size_t>(i)][s]] =
                static_cast<int>(s);
        dims[static_cast<size_t>(i)] =
            static_cast<long>(subsets[static_cast<size_t>(i)].size()) * alg.dim(j - i);
    }
    // ranks of d_i : C_i -> C_{i-1}
    std::vector<long> ranks(static_cast<size_t>(top) + 2, 0);
    for (int i = 1; i <= top; ++i) {
        long rows = dims[static_cast<size_t>(i) - 1];
        long cols = dims[static_cast<size_t>(i)];
        if (rows == 0 || cols == 0) continue;
        const int src_dim = alg.dim(j - i);
        const int dst_dim = alg.dim(j - i + 1);
        std::vector<std::vector<K>> m(static_cast<size_t>(rows),
                                      std::vector<K>(static_cast<size_t>(cols),
                                                     one - one));
        const auto& src_sets = subsets[static_cast<size_t>(i)];
        auto& dst_index = subset_index[static_cast<size_t>(i) - 1];
        for (size_t s = 0; s < src_sets.size(); ++s) {
            const auto& set = src_sets[s];
            for (int k = 0; k < src_dim; ++k) {
                long col = static_cast<long>(s) * src_dim + k;
                for (size_t pos = 0; pos < set.size(); ++pos) {
                    std::vector<int> reduced = set;
                    reduced.erase(reduced.begin() + static_cast<long>(pos));
                    int dst_set = dst_index.at(reduced);
                    bool negate = (pos % 2) == 1;
                    for (const auto& [idx, coeff] : alg.mult(set[pos], j - i, k)) {
                        long row = static_cast<long>(dst_set) * dst_dim + idx;
                        K v = negate ? (one - one) - coeff : coeff;
                        m[static_cast<size_t>(row)][static_cast<size_t>(col)] =
                            m[static_cast<size_t>(row)][static_cast<size_t>(col)] + v;
                    }
                }
            }
        }
        ranks[static_cast<size_t>(i)] = rank_of(m);
    }
    std::vector<long long> betti(static_cast<size_t>(top) + 1, 0);
    for (int i = 0; i <= top; ++i)
        betti[static_cast<size_t>(i)] = dims[static_cast<size_t>(i)] -
                                        ranks[static_cast<size_t>(i)] -
                                        ranks[static_cast<size_t>(i) + 1];
    return betti;
}

// R/I for a monomial ideal: standard monomial bases, multiplication maps
// are 0/1.
template <class K>
DegreewiseAlgebra<K> monomial_algebra(const MonomialIdeal& I, int jmax, const K& one) {
    DegreewiseAlgebra<K> alg;
    alg.nvars = I.nvars();
    alg.bases.resize(static_cast<size_t>(jmax) + 2);
    alg.index.resize(static_cast<size_t>(jmax) + 2);
    for (int d = 0; d <= jmax + 1; ++d) {
        alg.bases[static_cast<size_t>(d)] = I.standard_monomials(d);
        for (size_t k = 0; k < alg.bases[static_cast<size_t>(d)].size(); ++k)
            alg.index[static_cast<size_t>(d)][alg.bases[static_cast<size_t>(d)][k]] =
                static_cast<int>(k);
    }
    auto bases = std::make_shared<decltype(alg.bases)>(alg.bases);
    auto index = std::make_shared<decltype(alg.index)>(alg.index);
    int n = alg.nvars;
    alg.mult = [bases, index, n, one](int l, int d, int k)
        -> std::vector<std::pair<int, K>> {
        const Monomial& m = (*bases)[static_cast<size_t>(d)][static_cast<size_t>(k)];
        Monomial p = m * Monomial::variable(l, n);
        auto& idx = (*index)[static_cast<size_t>(d) + 1];
        auto it = idx.find(p);
        if (it == idx.end()) return {};
        return {{it->second, one}};
    };
    return alg;
}

} // namespace detail

struct BettiOptions {
    std::optional<int> j_max;      // default: degree of the lcm of the generators
    size_t oracle_cap = 200000;    // max multidegrees the oracle will visit
};

// Graded Betti numbers of R/I for a monomial ideal I via Koszul strand
// homology with exact rank computations.  Quotient-subject table.
template <class K = Rational>
BettiTable betti_koszul(const MonomialIdeal& I, const BettiOptions& opts = {},
                        const K& one = K(1)) {
    if (I.is_unit()) throw DomainError("Betti table of the zero quotient");
    int jmax = opts.j_max ? *opts.j_max : I.lcm_of_gens().degree();
    BettiTable table;
    table.nvars = I.nvars();
    table.subject = Subject::Quotient;
    table.truncated = opts.j_max && *opts.j_max < I.lcm_of_gens().degree();
    if (I.is_zero()) {
        table.set(0, 0, 1);
        return table;
    }
    detail::DegreewiseAlgebra<K> alg = detail::monomial_algebra(I, jmax, one);
    for (int j = 0; j <= jmax; ++j) {
        auto strand = detail::strand_homology(alg, j, one);
        for (int i = 0; i < static_cast<int>(strand.size()); ++i)
            table.set(i, j, strand[static_cast<size_t>(i)]);
    }
    return table;
}

// Same table for an arbitrary graded ideal: bases are the standard
// monomials of in(I) and multiplication reduces modulo the Groebner basis.
template <class K>
BettiTable betti_of_graded(const std::vector<Poly<K>>& gens, TermOrder ord,
                           const BettiOptions& opts = {},
                           const BuchbergerOptions& bopts = {}) {
    if (gens.empty()) throw DomainError("no generators");
    int n = gens.front().nvars();
    GroebnerBasis<K> gb = buchberger(gens, ord, bopts);
    MonomialIdeal lt = leading_ideal(gb, n);
    if (lt.is_unit()) throw DomainError("Betti table of the zero quotient");
    K one = one_like(gb.gens.front().leading_coeff());
    int jmax = opts.j_max ? *opts.j_max : lt.lcm_of_gens().degree();

    detail::DegreewiseAlgebra<K> alg;
    alg.nvars = n;
    alg.bases.resize(static_cast<size_t>(jmax) + 2);
    alg.index.resize(static_cast<size_t>(jmax) + 2);
    for (int d = 0; d <= jmax + 1; ++d) {
        alg.bases[static_cast<size_t>(d)] = lt.standard_monomials(d);
        for (size_t k = 0; k < alg.bases[static_cast<size_t>(d)].size(); ++k)
            alg.index[static_cast<size_t>(d)][alg.bases[static_cast<size_t>(d)][k]] =
                static_cast<int>(k);
    }
    auto bases = std::make_shared<decltype(alg.bases)>(alg.bases);
    auto index = std::make_shared<decltype(alg.index)>(alg.index);
    auto basis_ptr = std::make_shared<GroebnerBasis<K>>(gb);
    alg.mult = [bases, index, basis_ptr, n, ord, one](int l, int d, int k)
        -> std::vector<std::pair<int, K>> {
        const Monomial& m = (*bases)[static_cast<size_t>(d)][static_cast<size_t>(k)];
        Poly<K> p = Poly<K>::term(m * Monomial::variable(l, n), one, ord);
        Poly<K> nf = normal_form(p, basis_ptr->gens, ord);
        std::vector<std::pair<int, K>> out;
        auto& idx = (*index)[static_cast<size_t>(d) + 1];
        for (const auto& t : nf.terms()) out.push_back({idx.at(t.mon), t.coeff});
        return out;
    };

    BettiTable table;
    table.nvars = n;
    table.subject = Subject::Quotient;
    table.truncated = opts.j_max && *opts.j_max < lt.lcm_of_gens().degree();
    for (int j = 0; j <= jmax; ++j) {
        auto strand = detail::strand_homology(alg, j, one);
        for (int i = 0; i < static_cast<int>(strand.size()); ++i)
            table.set(i, j, strand[static_cast<size_t>(i)]);
    }
    return table;
}

// ---------------------------------------------------------------------------
// Independent oracle: multidegree-wise reduced simplicial homology of the
// upper Koszul complexes.  Exponential in n and the lcm box; test-scale only.
// ---------------------------------------------------------------------------

inline BettiTable betti_oracle(const MonomialIdeal& I, const BettiOptions& opts = {}) {
    if (I.is_unit()) throw DomainError("Betti table of the zero quotient");
    BettiTable ideal_table;
    ideal_table.nvars = I.nvars();
    ideal_table.subject = Subject::Ideal;
    if (I.is_zero()) return to_quotient_subject(ideal_table);

    const int n = I.nvars();
    Monomial box = I.lcm_of_gens();
    size_t cells = 1;
    for (int v = 0; v < n; ++v) {
        cells *= static_cast<size_t>(box[v]) + 1;
        if (cells > opts.oracle_cap)
            throw ResourceLimitError("oracle multidegree box exceeds the cap");
    }

    std::vector<int> a(static_cast<size_t>(n), 0);
    for (size_t cell = 0; cell < cells; ++cell) {
        size_t rest = cell;
        for (int v = 0; v < n; ++v) {
            a[static_cast<size_t>(v)] = static_cast<int>(rest % (box[v] + 1));
            rest /= static_cast<size_t>(box[v]) + 1;
        }
        Monomial xa(a);
        // faces of the upper Koszul complex at multidegree a
        std::vector<std::vector<std::vector<int>>> face_sets(static_cast<size_t>(n) + 2);
        bool any = false;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            Monomial q = xa;
            bool ok = true;
            for (int v = 0; v < n && ok; ++v)
                if (mask >> v & 1u) {
                    if (a[static_cast<size_t>(v)] == 0)
                        ok = false;
                    else
                        q = q / Monomial::variable(v, n);
                }
            if (!ok || !I.contains(q)) continue;
            std::vector<int> verts;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1u) verts.push_back(v);
            face_sets[verts.size()].push_back(verts);
            any = true;
        }
        if (!any) continue;
        // reduced boundary ranks; C_{-1} corresponds to the empty face
        std::vector<std::map<std::vector<int>, int>> face_index(static_cast<size_t>(n) + 2);
        for (size_t k = 0; k < face_sets.size(); ++k)
            for (size_t f = 0; f < face_sets[k].size(); ++f)
                face_index[k][face_sets[k][f]] = static_cast<int>(f);
        std::vector<long> rank_bd(static_cast<size_t>(n) + 2, 0);
        for (size_t k = 1; k < face_sets.size(); ++k) {
            if (face_sets[k].empty() || face_sets[k - 1].empty()) continue;
            IntMatrix m(face_sets[k - 1].size(),
                        std::vector<mpz_class>(face_sets[k].size(), mpz_class(0)));
            for (size_t f = 0; f < face_sets[k].size(); ++f) {
                const auto& verts = face_sets[k][f];
                for (size_t pos = 0; pos < verts.size(); ++pos) {
                    std::vector<int> sub = verts;
                    sub.erase(sub.begin() + static_cast<long>(pos));
                    auto it = face_index[k - 1].find(sub);
                    if (it == face_index[k - 1].end())
                        throw InternalError("upper Koszul complex not closed under faces");
                    m[static_cast<size_t>(it->second)][f] = (pos % 2) ? -1 : 1;
                }
            }
            rank_bd[k] = rank_bareiss(std::move(m));
        }
        int total = xa.degree();
        for (size_t k = 0; k < face_sets.size(); ++k) {
            long long h = static_cast<long long>(face_sets[k].size()) - rank_bd[k] -
                          (k + 1 < rank_bd.size() ? rank_bd[k + 1] : 0);
            // faces with k vertices are (k-1)-simplices; H~_{k-1} feeds beta_k
            if (h != 0)
                ideal_table.set(static_cast<int>(k), total,
                                ideal_table.at(static_cast<int>(k), total) + h);
        }
    }
    return to_quotient_subject(ideal_table);
}

// ---------------------------------------------------------------------------
// Diagram rendering, CoCoA layout: rows labeled j - i, columns i, totals.
// ---------------------------------------------------------------------------

inline std::string render_betti_diagram(const BettiTable& t) {
    if (t.entries.empty()) return "";
    int imax = 0, dmin = 0, dmax = 0;
    bool first = true;
    for (const auto& [k, v] : t.entries) {
        int i = k.first, d = k.second - k.first;
        if (first) {
            dmin = dmax = d;
            first = false;
        }
        imax = std::max(imax, i);
        dmin = std::min(dmin, d);
        dmax = std::max(dmax, d);
    }
    // value column i ends at character position 9 + 5i (1-based)
    auto emit_row = [&](std::string prefix, const std::vector<std::string>& vals) {
        std::string line = std::move(prefix);
        for (size_t i = 0; i < vals.size(); ++i) {
            size_t end = 9 + 5 * i;
            while (line.size() + vals[i].size() < end) line += ' ';
            line += vals[i];
        }
        return line + "\n";
    };
    std::ostringstream os;
    std::vector<std::string> header;
    for (int i = 0; i <= imax; ++i) header.push_back(std::to_string(i));
    std::string dashes(10 + 5 * static_cast<size_t>(imax), '-');
    os << emit_row("", header) << dashes << "\n";
    for (int d = dmin; d <= dmax; ++d) {
        std::string label = std::to_string(d) + ":";
        while (label.size() < 3) label.insert(label.begin(), ' ');
        std::vector<std::string> vals;
        for (int i = 0; i <= imax; ++i) {
            long long v = t.at(i, i + d);
            vals.push_back(v == 0 ? "-" : std::to_string(v));
        }
        os << emit_row(label, vals);
    }
    os << dashes << "\n";
    std::vector<std::string> totals;
    for (int i = 0; i <= imax; ++i) totals.push_back(std::to_string(t.total(i)));
    os << emit_row("Tot:", totals);
    return os.str();
}

} // namespace cca

#endif
