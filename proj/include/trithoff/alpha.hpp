#pragma once

// Certified arithmetic around the Tribonacci constant, the real root of
// x^3 - x^2 - x - 1. Sign questions about numbers of the form a + b*alpha
// are settled exactly through the cubic: the polynomial is negative left of
// alpha and positive right of it, so sign(p/q - alpha) = sign(f(p/q)).
// Interval enclosures come from exact Tribonacci ratios, verified by sign
// checks at both endpoints, and shrink monotonically under a cache.

#include <cstdint>
#include <mutex>
#include <utility>

#include "trithoff/bigint.hpp"
#include "trithoff/dyadic.hpp"
#include "trithoff/numeration.hpp"

namespace trithoff {

// sign of p^3 - p^2 q - p q^2 - q^3, i.e. sign of (p/q - alpha) for q > 0.
inline int cubic_sign(const BigInt& p, const BigInt& q) {
    BigInt p2 = p * p;
    BigInt q2 = q * q;
    return BigInt::cmp(p2 * p, p2 * q + (p + q) * q2);
}

// sign of f at a dyadic point m * 2^e with e <= 0.
inline int cubic_sign_dyadic(const Dyadic& x) {
    if (x.e > 0) return cubic_sign(x.m << static_cast<size_t>(x.e), BigInt(1));
    return cubic_sign(x.m, BigInt(1) << static_cast<size_t>(-x.e));
}

// Exact sign of a + b * alpha for integers a, b (never 0 unless a = b = 0).
inline int linear_form_sign(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) return a.sign();
    if (b.is_negative()) return -linear_form_sign(-a, -b);
    // a + b*alpha > 0  <=>  alpha > -a/b  <=>  f(-a/b) < 0
    return -cubic_sign(-a, b);
}

namespace detail {

struct AlphaCache {
    std::mutex mu;
    size_t bits = 0;
    DInterval box;
};

inline AlphaCache& alpha_cache() {
    static AlphaCache c;
    return c;
}

// Fresh enclosure of width <= 2^-bits from a Tribonacci ratio, with both
// endpoints certified by exact cubic signs.
inline DInterval compute_alpha(size_t bits) {
    // |T_{m+1}/T_m - alpha| decays like alpha^{-3m/2}; 0.76 bits of accuracy
    // per index is a safe under-estimate of that rate.
    size_t m = static_cast<size_t>(static_cast<double>(bits) / 0.76) + 64;
    BigInt tm = tribonacci(m), tm1 = tribonacci(m + 1);
    size_t k = bits + 2;
    BigInt center = (tm1 << k) / tm;
    Dyadic lo(center - BigInt(2), -static_cast<long long>(k));
    Dyadic hi(center + BigInt(2), -static_cast<long long>(k));
    for (int widen = 0; cubic_sign_dyadic(lo) >= 0; ++widen) {
        if (widen > 64) throw std::logic_error("alpha: lower endpoint would not certify");
        lo.m -= BigInt(2);
    }
    for (int widen = 0; cubic_sign_dyadic(hi) <= 0; ++widen) {
        if (widen > 64) throw std::logic_error("alpha: upper endpoint would not certify");
        hi.m += BigInt(2);
    }
    return DInterval(lo, hi);
}

}  // namespace detail

// Certified interval around alpha with width below 2^-bits.
inline DInterval alpha_bits(size_t bits) {
    auto& c = detail::alpha_cache();
    std::lock_guard<std::mutex> lock(c.mu);
    if (c.bits >= bits) return c.box;
    size_t target = std::max(bits + 16, size_t(96));
    c.box = detail::compute_alpha(target);
    c.bits = target;
    return c.box;
}

// Width below 10^-digits.
inline DInterval alpha_digits(size_t digits) {
    return alpha_bits(static_cast<size_t>(digits * 3.322) + 4);
}

// ---------------------------------------------------------------------------
// Companion root data: beta and gamma are the complex pair, with
// |beta| = |gamma| = alpha^{-1/2}, |beta - gamma| = sqrt(3 alpha^2 - 2 alpha - 5),
// and psi the polar angle of beta.
// ---------------------------------------------------------------------------

struct CompanionRoots {
    DInterval beta_modulus;
    DInterval beta_gamma_gap;
    DInterval psi;
};

namespace detail {

// arctan of y in [0,1) by its alternating Taylor series, outward-rounded.
inline DInterval atan_interval(const DInterval& y, size_t prec) {
    DInterval y2 = (y * y).outward(prec);
    DInterval term = y;
    DInterval sum = DInterval::exactly(0);
    bool add = true;
    size_t max_terms = 4 * prec + 64;
    for (size_t k = 0; k < max_terms; ++k) {
        DInterval piece = idiv(term, DInterval::exactly(2 * static_cast<long long>(k) + 1), prec);
        sum = add ? sum + piece : sum - piece;
        term = (term * y2).outward(prec);
        add = !add;
        // alternating series: the remainder is within the next term
        if (term.hi.sign() <= 0 ||
            term.hi < Dyadic(BigInt(1), -static_cast<long long>(prec + 4))) {
            sum = DInterval(sum.lo - term.hi, sum.hi + term.hi);
            return sum.outward(prec);
        }
    }
    throw std::logic_error("atan_interval: series did not settle");
}

// pi via Machin's formula with integer arctans evaluated in fixed point.
inline DInterval pi_interval(size_t prec) {
    auto atan_inv = [prec](unsigned m) {
        // sum (-1)^k / ((2k+1) m^(2k+1)) in scale 2^B with per-term floor error
        size_t B = prec + 16;
        BigInt num = (BigInt(1) << B) / BigInt(static_cast<long long>(m));
        BigInt m2(static_cast<long long>(m) * m);
        BigInt acc;
        long long k = 0;
        size_t terms = 0;
        while (!num.is_zero()) {
            BigInt piece = num / BigInt(2 * k + 1);
            acc = (k % 2 == 0) ? acc + piece : acc - piece;
            num = num / m2;
            ++k;
            ++terms;
        }
        // every division floors away < 1 ulp and errors compound through the
        // iterated num; 3 per term plus tail is a comfortable envelope
        BigInt slack(static_cast<long long>(3 * terms + 4));
        return DInterval(Dyadic(acc - slack, -static_cast<long long>(B)),
                         Dyadic(acc + slack, -static_cast<long long>(B)));
    };
    DInterval a5 = atan_inv(5), a239 = atan_inv(239);
    return (a5.scaled(BigInt(16)) - a239.scaled(BigInt(4))).outward(prec + 8);
}

}  // namespace detail

inline CompanionRoots companion_roots(size_t prec = 128) {
    DInterval a = alpha_bits(prec + 16);
    CompanionRoots r;
    // |beta|^2 = 1/alpha
    DInterval inv_alpha = idiv(DInterval::exactly(1), a, prec + 8);
    r.beta_modulus = isqrt_interval(inv_alpha, prec);
    DInterval three_a2 = (a * a).scaled(BigInt(3));
    DInterval inner = three_a2 - a.scaled(BigInt(2)) - DInterval::exactly(5);
    r.beta_gamma_gap = isqrt_interval(inner.outward(prec + 8), prec);
    // beta = (1 - alpha)/2 + i*gap/2; Re < 0, so psi = pi/2 + atan(|Re|/Im)
    DInterval ratio = idiv(a - DInterval::exactly(1), r.beta_gamma_gap, prec + 8);
    DInterval at = detail::atan_interval(ratio, prec + 8);
    DInterval pi = detail::pi_interval(prec + 8);
    r.psi = (idiv(pi, DInterval::exactly(2), prec + 8) + at).outward(prec);
    return r;
}

}  // namespace trithoff
