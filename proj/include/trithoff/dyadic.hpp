#pragma once

// Dyadic rationals m * 2^e and closed intervals over them. All interval
// endpoints are exact; directed rounding appears only where an operation
// (division, sqrt, precision trimming) cannot stay exact.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "trithoff/bigint.hpp"

namespace trithoff {

struct Dyadic {
    BigInt m;
    long long e = 0;  // value = m * 2^e

    Dyadic() = default;
    Dyadic(BigInt mantissa, long long exp2) : m(std::move(mantissa)), e(exp2) {}
    Dyadic(long long v) : m(v), e(0) {}

    bool is_zero() const { return m.is_zero(); }
    int sign() const { return m.sign(); }

    static void align(const Dyadic& a, const Dyadic& b, BigInt& ma, BigInt& mb, long long& e) {
        e = std::min(a.e, b.e);
        ma = a.m << static_cast<size_t>(a.e - e);
        mb = b.m << static_cast<size_t>(b.e - e);
    }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        BigInt ma, mb;
        long long e;
        align(a, b, ma, mb, e);
        return Dyadic(ma + mb, e);
    }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) {
        BigInt ma, mb;
        long long e;
        align(a, b, ma, mb, e);
        return Dyadic(ma - mb, e);
    }
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
        return Dyadic(a.m * b.m, a.e + b.e);
    }
    Dyadic operator-() const { return Dyadic(-m, e); }

    static int cmp(const Dyadic& a, const Dyadic& b) {
        BigInt ma, mb;
        long long e;
        align(a, b, ma, mb, e);
        return BigInt::cmp(ma, mb);
    }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a, b) < 0; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) >= 0; }
    friend bool operator==(const Dyadic& a, const Dyadic& b) { return cmp(a, b) == 0; }

    // Largest dyadic with ~prec significant bits that is <= (round down)
    // or >= (round up) this value.
    Dyadic rounded(size_t prec, bool up) const {
        size_t bl = m.bit_length();
        if (bl <= prec) return *this;
        size_t drop = bl - prec;
        BigInt q = m.abs() >> drop;
        bool exact = (q << drop) == m.abs();
        if (!exact && (up == !m.is_negative())) q = q + BigInt(1);
        return Dyadic(m.is_negative() ? -q : q, e + static_cast<long long>(drop));
    }

    double to_double() const {
        // display helper only
        double r = 0;
        std::string s = m.to_string();
        bool neg = !s.empty() && s[0] == '-';
        for (char c : s)
            if (c >= '0' && c <= '9') r = r * 10 + (c - '0');
        if (neg) r = -r;
        long long k = e;
        while (k > 0) { r *= 2; --k; }
        while (k < 0) { r /= 2; ++k; }
        return r;
    }

    // Decimal rendering truncated toward zero to `digits` fractional digits.
    std::string to_decimal(size_t digits) const {
        BigInt scaled = m * pow(BigInt(10), digits);
        BigInt shifted = e >= 0 ? (scaled << static_cast<size_t>(e))
                                : (scaled >> static_cast<size_t>(-e));
        bool neg = shifted.is_negative();
        std::string s = shifted.abs().to_string();
        if (s.size() <= digits) s.insert(0, std::string(digits + 1 - s.size(), '0'));
        s.insert(s.size() - digits, ".");
        if (neg) s.insert(0, "-");
        return s;
    }
};

// q <= a/b, with at least `prec` significant bits. b must be nonzero.
inline Dyadic div_down(const Dyadic& a, const Dyadic& b, size_t prec) {
    if (b.is_zero()) throw std::domain_error("dyadic division by zero");
    // Work with magnitudes: a/b = sign * |a|/|b|.
    int sg = a.sign() * b.sign();
    if (sg == 0) return Dyadic();
    BigInt na = a.m.abs(), nb = b.m.abs();
    long long shift = static_cast<long long>(prec) + static_cast<long long>(nb.bit_length()) -
                      static_cast<long long>(na.bit_length()) + 2;
    if (shift < 0) shift = 0;
    BigInt q = (na << static_cast<size_t>(shift)) / nb;
    if (sg < 0) {
        // floor for the negative value: make it more negative if inexact
        if (q * nb != (na << static_cast<size_t>(shift))) q = q + BigInt(1);
        q = -q;
    }
    return Dyadic(q, a.e - b.e - shift);
}

inline Dyadic div_up(const Dyadic& a, const Dyadic& b, size_t prec) {
    return -div_down(-a, b, prec);
}

// Closed interval [lo, hi]; lo <= hi is maintained by every operation.
struct DInterval {
    Dyadic lo, hi;

    DInterval() = default;
    DInterval(Dyadic l, Dyadic h) : lo(std::move(l)), hi(std::move(h)) {
        if (Dyadic::cmp(lo, hi) > 0) throw std::logic_error("DInterval: lo > hi");
    }
    static DInterval exactly(const Dyadic& v) { return DInterval(v, v); }
    static DInterval exactly(long long v) { return DInterval(Dyadic(v), Dyadic(v)); }

    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    int sign() const {
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
        return 0;
    }
    Dyadic width() const { return hi - lo; }

    friend DInterval operator+(const DInterval& a, const DInterval& b) {
        return DInterval(a.lo + b.lo, a.hi + b.hi);
    }
    friend DInterval operator-(const DInterval& a, const DInterval& b) {
        return DInterval(a.lo - b.hi, a.hi - b.lo);
    }
    friend DInterval operator*(const DInterval& a, const DInterval& b) {
        Dyadic c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
        Dyadic mn = c[0], mx = c[0];
        for (int i = 1; i < 4; ++i) {
            if (c[i] < mn) mn = c[i];
            if (c[i] > mx) mx = c[i];
        }
        return DInterval(mn, mx);
    }
    DInterval operator-() const { return DInterval(-hi, -lo); }

    DInterval scaled(const BigInt& k) const {
        Dyadic a(lo.m * k, lo.e), b(hi.m * k, hi.e);
        return k.is_negative() ? DInterval(std::move(b), std::move(a))
                               : DInterval(std::move(a), std::move(b));
    }

    // Round endpoints outward to ~prec significant bits.
    DInterval outward(size_t prec) const {
        return DInterval(lo.rounded(prec, false), hi.rounded(prec, true));
    }

    // True when every point of a is strictly below every point of b.
    static bool strictly_below(const DInterval& a, const DInterval& b) {
        return Dyadic::cmp(a.hi, b.lo) < 0;
    }
    static bool overlap(const DInterval& a, const DInterval& b) {
        return !(strictly_below(a, b) || strictly_below(b, a));
    }
};

// Reciprocal-free positive interval division with outward rounding.
inline DInterval idiv(const DInterval& a, const DInterval& b, size_t prec) {
    if (b.contains_zero()) throw std::domain_error("interval division through zero");
    Dyadic lo, hi;
    if (b.sign() > 0) {
        lo = a.lo.sign() >= 0 ? div_down(a.lo, b.hi, prec) : div_down(a.lo, b.lo, prec);
        hi = a.hi.sign() >= 0 ? div_up(a.hi, b.lo, prec) : div_up(a.hi, b.hi, prec);
    } else {
        lo = a.hi.sign() >= 0 ? div_down(a.hi, b.hi, prec) : div_down(a.hi, b.lo, prec);
        hi = a.lo.sign() >= 0 ? div_up(a.lo, b.lo, prec) : div_up(a.lo, b.hi, prec);
    }
    return DInterval(lo, hi);
}

// Interval square root for nonnegative intervals.
// sqrt(m * 2^e) = isqrt(m << s) * 2^{(e-s)/2} when e-s is even.
inline DInterval isqrt_interval(const DInterval& x, size_t prec) {
    if (x.lo.sign() < 0) throw std::domain_error("interval sqrt of negative range");
    auto root_of = [prec](const Dyadic& v, bool up) {
        long long s = 2 * static_cast<long long>(prec) - v.e;
        if (s < 0) s = 0;
        if ((v.e - s) % 2 != 0) ++s;
        BigInt scaled = v.m << static_cast<size_t>(s);
        BigInt root = isqrt(scaled);
        if (up && root * root != scaled) root = root + BigInt(1);
        return Dyadic(root, (v.e - s) / 2);
    };
    return DInterval(root_of(x.lo, false), root_of(x.hi, true));
}

// x^n with outward rounding every step to keep mantissas near prec bits.
inline DInterval ipow(const DInterval& x, unsigned n, size_t prec) {
    DInterval r = DInterval::exactly(1);
    DInterval base = x;
    while (n) {
        if (n & 1) r = (r * base).outward(prec);
        base = (base * base).outward(prec);
        n >>= 1;
    }
    return r;
}

}  // namespace trithoff
