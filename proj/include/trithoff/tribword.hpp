#pragma once

// The Tribonacci word and the certified-sign analysis of Tribonacci growth:
// delta(n) = T_{n+1} - alpha*T_n, the P/Q sign partition, successor
// deviations out(n) - alpha*n, and their records.

#include <cstdint>
#include <string>
#include <vector>

#include "trithoff/alpha.hpp"
#include "trithoff/bigint.hpp"
#include "trithoff/dyadic.hpp"
#include "trithoff/errors.hpp"
#include "trithoff/numeration.hpp"

namespace trithoff {

// ---------------------------------------------------------------------------
// The word itself
// ---------------------------------------------------------------------------

// Prefix of the limit of W(n) = W(n-1)W(n-2)W(n-3), W(0)=a, W(1)=ab, W(2)=abac.
inline std::string tribonacci_word(size_t n_letters) {
    if (n_letters == 0) return "";
    std::string w2 = "a", w1 = "ab", w0 = "abac";
    while (w0.size() < n_letters) {
        std::string next = w0 + w1 + w2;
        w2 = std::move(w1);
        w1 = w0;
        w0 = std::move(next);
    }
    return w0.substr(0, n_letters);
}

// Letter at 1-based position n: a, b, or c according to whether the
// representation of n-1 ends in 0, 01, or 11.
inline char letter_at(long long n) {
    if (n < 1) throw std::domain_error("letter_at: positions start at 1");
    unsigned long long mask = detail::trib_mask64(n - 1);
    if ((mask & 1) == 0) return 'a';
    return (mask & 2) ? 'c' : 'b';
}

inline std::vector<long long> letter_positions(char letter, size_t count) {
    std::vector<long long> out;
    out.reserve(count);
    for (long long n = 1; out.size() < count; ++n)
        if (letter_at(n) == letter) out.push_back(n);
    return out;
}

// ---------------------------------------------------------------------------
// delta(n) = T_{n+1} - alpha * T_n
// ---------------------------------------------------------------------------

// Exact sign; never 0 for n >= 2 (alpha is irrational), +1 at n = 1 and
// 0 at n = 0 where the value is literally 0.
inline int delta_sign(size_t n) {
    if (n == 0) return 0;
    if (n == 1) return 1;
    return cubic_sign(tribonacci(n + 1), tribonacci(n));
}

struct DeltaOptions {
    size_t max_bits = 1 << 22;  // refinement cap before PrecisionCeiling
};

// Certified interval for T_{n+1} - alpha*T_n whose sign is determined
// (except n = 0, where the value is exactly zero).
inline DInterval delta(size_t n, DeltaOptions opt = {}) {
    if (n == 0) return DInterval::exactly(0);
    if (n == 1) return DInterval::exactly(1);
    BigInt tn = tribonacci(n), tn1 = tribonacci(n + 1);
    // the magnitude is about alpha^{-n/2}, and alpha*T_n needs matching bits
    size_t bits = static_cast<size_t>(1.4 * static_cast<double>(n)) + 64;
    for (;; bits *= 2) {
        if (bits > opt.max_bits) throw PrecisionCeiling();
        DInterval a = alpha_bits(bits);
        DInterval v = DInterval::exactly(Dyadic(tn1, 0)) - a.scaled(tn);
        if (!v.contains_zero()) return v;
    }
}

// P = indices with delta >= 0, Q = indices with delta < 0, over 0..N.
inline std::pair<std::vector<long long>, std::vector<long long>> sign_sequences(size_t N) {
    std::vector<long long> p, q;
    BigInt t0(0), t1(0), t2(1);  // rolling T_n, T_{n+1}, T_{n+2}
    for (size_t n = 0; n <= N; ++n) {
        int s;
        if (n == 0)
            s = 0;
        else if (n == 1)
            s = 1;
        else
            s = cubic_sign(t1, t0);
        (s >= 0 ? p : q).push_back(static_cast<long long>(n));
        BigInt t3 = t0 + t1 + t2;
        t0 = t1;
        t1 = t2;
        t2 = t3;
    }
    return {std::move(p), std::move(q)};
}

// ---------------------------------------------------------------------------
// Successor deviation out(n) - alpha*n
// ---------------------------------------------------------------------------

inline DInterval successor_deviation(const BigInt& n, size_t bits = 192) {
    DInterval a = alpha_bits(bits);
    BigInt out = successor(n);
    return DInterval::exactly(Dyadic(out, 0)) - a.scaled(n);
}

// Tribonacci indices of the representation of n, descending; the digit
// at position k carries index k + 3.
inline std::vector<int> repr_indices(const BigInt& n) {
    TribDigits w = to_canonical(n);
    std::vector<int> idx;
    for (size_t i = 0; i < w.size(); ++i)
        if (!w.digits[i].is_zero())
            idx.push_back(static_cast<int>(w.size() - 1 - i) + 3);
    return idx;
}

struct RecordEntry {
    long long n;
    DInterval deviation;
    std::vector<int> indices;  // descending Tribonacci indices
};

// Running extrema of the successor deviation over 1..N for one sign.
// positive: values that strictly exceed everything before them (and are > 0);
// negative: values strictly below everything before them (and < 0).
// The running maximum always coincides with the latest record, so comparing
// against it decides record-ness.
inline std::vector<RecordEntry> records(long long N, bool positive) {
    std::vector<RecordEntry> out;
    size_t bits = 224;
    bool have_best = false;
    DInterval best;
    long long best_n = 0;
    for (long long n = 1; n <= N; ++n) {
        DInterval dev = successor_deviation(BigInt(n), bits);
        if (!positive) dev = -dev;
        if (have_best) {
            while (DInterval::overlap(best, dev)) {
                if (bits > (1u << 22)) throw PrecisionCeiling();
                bits *= 2;
                dev = successor_deviation(BigInt(n), bits);
                best = successor_deviation(BigInt(best_n), bits);
                if (!positive) {
                    dev = -dev;
                    best = -best;
                }
            }
        }
        bool record = (!have_best || DInterval::strictly_below(best, dev)) && dev.sign() > 0;
        if (record) {
            RecordEntry e;
            e.n = n;
            e.deviation = positive ? dev : -dev;
            e.indices = repr_indices(BigInt(n));
            out.push_back(std::move(e));
            best = dev;
            best_n = n;
            have_best = true;
        }
    }
    return out;
}

// Largest |out(n) - alpha*n| over 1..N, as a certified interval.
inline DInterval max_abs_deviation(long long N, size_t bits = 224) {
    DInterval a = alpha_bits(bits);
    const auto& T = detail::tribs64();
    // per-index deltas cover every representation index that can appear
    size_t top = 3;
    while (top + 2 < T.size() && T[top + 1] <= N) ++top;
    std::vector<DInterval> deltas;  // deltas[i] = T_{i+1} - alpha T_i
    for (size_t i = 0; i <= top + 1; ++i)
        deltas.push_back(DInterval::exactly(Dyadic(BigInt(T[i + 1]), 0)) -
                         a.scaled(BigInt(T[i])));
    DInterval best = DInterval::exactly(0);
    for (long long n = 1; n <= N; ++n) {
        unsigned long long mask = detail::trib_mask64(n);
        DInterval dev = DInterval::exactly(0);
        while (mask) {
            int k = __builtin_ctzll(mask);
            dev = dev + deltas[k + 3];
            mask &= mask - 1;
        }
        if (dev.sign() < 0) dev = -dev;
        if (Dyadic::cmp(dev.hi, best.hi) > 0) best = dev;
    }
    return best;
}

// ---------------------------------------------------------------------------
// Bound checks
// ---------------------------------------------------------------------------

// The geometric majorant 2(alpha^{-3/2} + alpha^{-2}) / (|b-g| (1 - alpha^{-3/2}))
// from the deviation bound proof; lands near 1.91746.
inline DInterval deviation_series_bound(size_t prec = 96) {
    DInterval a = alpha_bits(prec + 16);
    DInterval inv = idiv(DInterval::exactly(1), a, prec);            // alpha^-1
    DInterval inv_half = isqrt_interval(inv, prec);                  // alpha^-1/2
    DInterval inv32 = (inv * inv_half).outward(prec);                // alpha^-3/2
    DInterval inv2 = (inv * inv).outward(prec);                      // alpha^-2
    DInterval gap = companion_roots(prec).beta_gamma_gap;
    DInterval numer = (inv32 + inv2).scaled(BigInt(2));
    DInterval denom = gap * (DInterval::exactly(1) - inv32);
    return idiv(numer, denom, prec);
}

// Decay envelope 2 alpha^{-n/2} / |beta - gamma| for |delta(n)|.
inline DInterval delta_decay_bound(size_t n, size_t prec = 160) {
    DInterval a = alpha_bits(prec + 16);
    DInterval inv = idiv(DInterval::exactly(1), a, prec);
    DInterval inv_half = isqrt_interval(inv, prec);
    DInterval pw = ipow(inv_half, static_cast<unsigned>(n), prec);
    DInterval gap = companion_roots(prec).beta_gamma_gap;
    return idiv(pw.scaled(BigInt(2)), gap, prec);
}

// The n-th a-position sits within one of a multiple of alpha. The literal
// window (alpha n - 1, alpha n + 1) already fails at n = 5, where the
// position is 8 but alpha*5 = 9.196; the window that the data does satisfy
// is alpha(n-1) - 1 < pos < alpha n + 1, checked exactly here.
inline bool a_position_in_bounds(long long n, long long pos) {
    // pos < alpha*n + 1      <=>  (pos - 1) - alpha*n < 0
    // pos > alpha*(n-1) - 1  <=>  (pos + 1) - alpha*(n-1) > 0
    return linear_form_sign(BigInt(pos - 1), BigInt(-n)) < 0 &&
           linear_form_sign(BigInt(pos + 1), BigInt(-(n - 1))) > 0;
}

}  // namespace trithoff
