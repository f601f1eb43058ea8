#ifndef CCA_MONOMIAL_HPP
#define CCA_MONOMIAL_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "cca/errors.hpp"

namespace cca {

// A monomial in K[x_1..x_n], stored as its dense exponent vector.
// Variables are indexed 0..n-1 in code and printed 1-based.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars) : e_(static_cast<size_t>(nvars), 0) {
        if (nvars < 1) throw DomainError("ring needs at least one variable");
    }
    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
        if (e_.empty()) throw DomainError("ring needs at least one variable");
        for (int x : e_)
            if (x < 0) throw DomainError("negative exponent");
    }

    static Monomial one(int nvars) { return Monomial(nvars); }
    static Monomial variable(int i, int nvars, int power = 1) {
        Monomial m(nvars);
        if (i < 0 || i >= nvars) throw DomainError("variable index out of range");
        if (power < 0) throw DomainError("negative exponent");
        m.e_[static_cast<size_t>(i)] = power;
        return m;
    }

    int nvars() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
    }
    const std::vector<int>& exponents() const { return e_; }

    std::vector<int> support() const {
        std::vector<int> s;
        for (int i = 0; i < nvars(); ++i)
            if (e_[static_cast<size_t>(i)] > 0) s.push_back(i);
        return s;
    }

    bool divides(const Monomial& other) const {
        check(other);
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > other.e_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        check(other);
        Monomial r(nvars());
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + other.e_[i];
        return r;
    }

    // Exact quotient; caller must know divisibility holds.
    Monomial operator/(const Monomial& other) const {
        check(other);
        Monomial r(nvars());
        for (size_t i = 0; i < e_.size(); ++i) {
            if (other.e_[i] > e_[i]) throw DomainError("monomial quotient is not exact");
            r.e_[i] = e_[i] - other.e_[i];
        }
        return r;
    }

    // Exponent-wise max(a-b, 0): the generator image under a colon by b.
    Monomial colon_quotient(const Monomial& other) const {
        check(other);
        Monomial r(nvars());
        for (size_t i = 0; i < e_.size(); ++i)
            r.e_[i] = std::max(e_[i] - other.e_[i], 0);
        return r;
    }

    Monomial lcm(const Monomial& other) const {
        check(other);
        Monomial r(nvars());
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::max(e_[i], other.e_[i]);
        return r;
    }

    Monomial gcd(const Monomial& other) const {
        check(other);
        Monomial r(nvars());
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::min(e_[i], other.e_[i]);
        return r;
    }

    bool coprime_with(const Monomial& other) const {
        check(other);
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && other.e_[i] > 0) return false;
        return true;
    }

    Monomial with_exponent(int i, int value) const {
        Monomial r = *this;
        if (value < 0) throw DomainError("negative exponent");
        r.e_[static_cast<size_t>(i)] = value;
        return r;
    }

    // x_i -> x_{n+1-i}: mirrors the variable order.
    Monomial reversed() const {
        Monomial r = *this;
        std::reverse(r.e_.begin(), r.e_.end());
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.e_ == b.e_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) {
        return !(a == b);
    }
    // Container ordering only; term orders live in order.hpp.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return a.e_ < b.e_;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        std::string out;
        for (int i = 0; i < nvars(); ++i) {
            int ex = e_[static_cast<size_t>(i)];
            if (ex == 0) continue;
            if (!out.empty()) out += "*";
            out += i < static_cast<int>(names.size()) ? names[static_cast<size_t>(i)]
                                                      : "x" + std::to_string(i + 1);
            if (ex > 1) out += "^" + std::to_string(ex);
        }
        return out.empty() ? "1" : out;
    }

private:
    void check(const Monomial& other) const {
        if (e_.size() != other.e_.size())
            throw RingMismatchError("monomials from rings of different size");
    }

    std::vector<int> e_;
};

// All monomials of the given total degree, in a deterministic order.
inline std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    if (degree < 0) throw DomainError("negative degree");
    std::vector<Monomial> out;
    std::vector<int> cur(static_cast<size_t>(nvars), 0);
    // lexicographic enumeration over exponent vectors
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == nvars - 1) {
            cur[static_cast<size_t>(pos)] = left;
            out.emplace_back(cur);
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur[static_cast<size_t>(pos)] = k;
            self(self, pos + 1, left - k);
        }
    };
    rec(rec, 0, degree);
    return out;
}

} // namespace cca

#endif
