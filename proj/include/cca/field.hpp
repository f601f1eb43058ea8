#ifndef CCA_FIELD_HPP
#define CCA_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "cca/errors.hpp"

namespace cca {

// Default coefficient field: exact rationals.  mpq_class keeps values in
// lowest terms with positive denominator after canonicalize().
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& x) { return x == 0; }
inline Rational one_like(const Rational&) { return Rational(1); }
inline std::string to_string(const Rational& x) { return x.get_str(); }

inline bool is_prime(uint64_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Prime field of machine-word size.  Elements carry their modulus; mixing
// moduli is a ring mismatch.  p must be prime (not verified here beyond
// trivial checks) and < 2^31 so products fit in uint64_t.
class GFp {
public:
    GFp() : v_(0), p_(2) {}
    GFp(long long v, uint64_t p) : p_(p) {
        if (p < 2 || p >= (uint64_t(1) << 31))
            throw DomainError("prime modulus out of range");
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        v_ = static_cast<uint64_t>(r);
    }

    uint64_t value() const { return v_; }
    uint64_t modulus() const { return p_; }

    friend GFp operator+(const GFp& a, const GFp& b) {
        a.check(b);
        uint64_t s = a.v_ + b.v_;
        if (s >= a.p_) s -= a.p_;
        return GFp::raw(s, a.p_);
    }
    friend GFp operator-(const GFp& a, const GFp& b) {
        a.check(b);
        uint64_t s = a.v_ + a.p_ - b.v_;
        if (s >= a.p_) s -= a.p_;
        return GFp::raw(s, a.p_);
    }
    GFp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
    friend GFp operator*(const GFp& a, const GFp& b) {
        a.check(b);
        return GFp::raw((a.v_ * b.v_) % a.p_, a.p_);
    }
    friend GFp operator/(const GFp& a, const GFp& b) {
        a.check(b);
        if (b.v_ == 0) throw DomainError("division by zero in GF(p)");
        return a * b.inverse();
    }
    GFp& operator+=(const GFp& b) { return *this = *this + b; }
    GFp& operator-=(const GFp& b) { return *this = *this - b; }
    GFp& operator*=(const GFp& b) { return *this = *this * b; }
    GFp& operator/=(const GFp& b) { return *this = *this / b; }

    friend bool operator==(const GFp& a, const GFp& b) {
        a.check(b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const GFp& a, const GFp& b) { return !(a == b); }
    friend bool operator==(const GFp& a, int b) { return a == GFp(b, a.p_); }
    friend bool operator!=(const GFp& a, int b) { return !(a == b); }

    GFp inverse() const {
        // extended Euclid
        if (v_ == 0) throw DomainError("inverse of zero in GF(p)");
        int64_t t = 0, new_t = 1;
        int64_t r = static_cast<int64_t>(p_), new_r = static_cast<int64_t>(v_);
        while (new_r != 0) {
            int64_t q = r / new_r;
            int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (r != 1) throw DomainError("modulus is not prime");
        if (t < 0) t += static_cast<int64_t>(p_);
        return raw(static_cast<uint64_t>(t), p_);
    }

private:
    static GFp raw(uint64_t v, uint64_t p) {
        GFp x;
        x.v_ = v;
        x.p_ = p;
        return x;
    }
    void check(const GFp& other) const {
        if (p_ != other.p_)
            throw RingMismatchError("GF(p) elements with different moduli");
    }

    uint64_t v_;
    uint64_t p_;
};

inline bool is_zero(const GFp& x) { return x.value() == 0; }
inline GFp one_like(const GFp& x) { return GFp(1, x.modulus()); }
inline std::string to_string(const GFp& x) { return std::to_string(x.value()); }

} // namespace cca

#endif
