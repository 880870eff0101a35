#pragma once

// ExtraTrib sequences: integer sequences obeying the Tribonacci rule whose
// right tail is positive. Anchored by three consecutive terms; extendable in
// both directions. Carries the difference calculus, parity classification,
// array location (by canonization and by wall scan), multiples, leftward
// sign behavior, and the reversal refutation.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trithoff/bigint.hpp"
#include "trithoff/numeration.hpp"
#include "trithoff/trithoff_array.hpp"

namespace trithoff {

// Tribonacci numbers extended to negative indices by running the rule
// backward: T_{k} = T_{k+3} - T_{k+2} - T_{k+1}.
inline BigInt tribonacci_ext(long long n) {
    if (n >= 0) return tribonacci(static_cast<size_t>(n));
    BigInt t0(0), t1(0), t2(1);  // T_0, T_1, T_2
    for (long long i = -1; i >= n; --i) {
        BigInt prev = t2 - t1 - t0;  // T_i
        t2 = t1;
        t1 = t0;
        t0 = prev;
    }
    return t0;
}

struct ExtraTrib {
    long long base_index = 0;
    std::array<BigInt, 3> anchor;  // terms at base_index, +1, +2

    ExtraTrib() : anchor{BigInt(0), BigInt(0), BigInt(1)} {}
    ExtraTrib(long long base, BigInt s0, BigInt s1, BigInt s2)
        : base_index(base), anchor{std::move(s0), std::move(s1), std::move(s2)} {}

    static ExtraTrib tribonacci_seq() { return ExtraTrib(0, BigInt(0), BigInt(0), BigInt(1)); }

    BigInt term(long long n) const {
        BigInt a = anchor[0], b = anchor[1], c = anchor[2];
        if (n >= base_index) {
            for (long long i = base_index; i + 2 < n; ++i) {
                BigInt d = a + b + c;
                a = std::move(b);
                b = std::move(c);
                c = std::move(d);
            }
            if (n == base_index) return a;
            if (n == base_index + 1) return b;
            return c;
        }
        for (long long i = base_index - 1; i >= n; --i) {
            BigInt prev = c - b - a;
            c = std::move(b);
            b = std::move(a);
            a = std::move(prev);
        }
        return a;
    }

    // terms for indices lo..hi inclusive
    std::vector<BigInt> terms(long long lo, long long hi) const {
        std::vector<BigInt> out;
        if (hi < lo) return out;
        out.reserve(static_cast<size_t>(hi - lo + 1));
        BigInt a = term(lo), b = term(lo + 1), c = term(lo + 2);
        for (long long i = lo; i <= hi; ++i) {
            out.push_back(a);
            BigInt d = a + b + c;
            a = std::move(b);
            b = std::move(c);
            c = std::move(d);
        }
        return out;
    }

    friend ExtraTrib operator+(const ExtraTrib& x, const ExtraTrib& y) {
        long long base = std::max(x.base_index, y.base_index);
        return ExtraTrib(base, x.term(base) + y.term(base),
                         x.term(base + 1) + y.term(base + 1),
                         x.term(base + 2) + y.term(base + 2));
    }

    ExtraTrib scaled(const BigInt& k) const {
        return ExtraTrib(base_index, anchor[0] * k, anchor[1] * k, anchor[2] * k);
    }

    // "index=<n>" header plus comma-separated terms
    std::string serialize(size_t count) const {
        std::string s = "index=" + std::to_string(base_index) + "\n";
        for (size_t i = 0; i < count; ++i) {
            if (i) s += ",";
            s += term(base_index + static_cast<long long>(i)).to_string();
        }
        return s;
    }
};

// Closed form S_{base+m} = a T_{m-1} + (c-b) T_m + b T_{m+1} for anchor (a,b,c).
inline BigInt closed_form_term(const ExtraTrib& s, long long n) {
    long long m = n - s.base_index;
    return s.anchor[0] * tribonacci_ext(m - 1) + (s.anchor[2] - s.anchor[1]) * tribonacci_ext(m) +
           s.anchor[1] * tribonacci_ext(m + 1);
}

// The sequence of first differences, anchored at the same base index.
inline ExtraTrib difference(const ExtraTrib& s) {
    const BigInt& a = s.anchor[0];
    const BigInt& b = s.anchor[1];
    const BigInt& c = s.anchor[2];
    return ExtraTrib(s.base_index, b - a, c - b, a + b);
}

// Index of the first all-positive triple at or after the base (after which
// every term stays positive). Throws if none shows up within the cap: the
// sequence is not an extraTrib.
inline long long first_positive_triple(const ExtraTrib& s, long long cap = 1000) {
    BigInt a = s.anchor[0], b = s.anchor[1], c = s.anchor[2];
    for (long long i = 0; i <= cap; ++i) {
        if (a.sign() > 0 && b.sign() > 0 && c.sign() > 0) return s.base_index + i;
        BigInt d = a + b + c;
        a = std::move(b);
        b = std::move(c);
        c = std::move(d);
    }
    throw std::domain_error("not an extraTrib: no positive tail within cap");
}

// ---------------------------------------------------------------------------
// Parity and the difference-inverse
// ---------------------------------------------------------------------------

enum class ParityType { EEEE, OOOO, EOEO, EEOO };

inline const char* to_string(ParityType t) {
    switch (t) {
        case ParityType::EEEE: return "EEEE";
        case ParityType::OOOO: return "OOOO";
        case ParityType::EOEO: return "EOEO";
        case ParityType::EEOO: return "EEOO";
    }
    return "?";
}

// Three consecutive parities determine the whole 4-periodic pattern.
inline ParityType parity_type(const ExtraTrib& s) {
    bool e0 = s.anchor[0].is_even(), e1 = s.anchor[1].is_even(), e2 = s.anchor[2].is_even();
    if (e0 && e1 && e2) return ParityType::EEEE;
    if (!e0 && !e1 && !e2) return ParityType::OOOO;
    if (e0 == e2) return ParityType::EOEO;
    return ParityType::EEOO;
}

// The unique Tribonacci-like sequence whose difference is s; integral (and
// returned) exactly when the parity type is not EEOO.
inline std::optional<ExtraTrib> difference_inverse(const ExtraTrib& s) {
    const BigInt& a = s.anchor[0];
    const BigInt& b = s.anchor[1];
    const BigInt& c = s.anchor[2];
    BigInt ca = c - a;
    if (!ca.is_even()) return std::nullopt;
    BigInt two(2);
    return ExtraTrib(s.base_index, ca / two, (a + c) / two, (a + two * b + c) / two);
}

// Largest v with every term divisible by 2^v (the anchor suffices).
inline size_t valuation(const ExtraTrib& s) {
    size_t best = static_cast<size_t>(-1);
    bool all_zero = true;
    for (const auto& t : s.anchor) {
        if (t.is_zero()) continue;
        all_zero = false;
        best = std::min(best, t.trailing_zero_bits());
    }
    if (all_zero) throw std::domain_error("valuation: zero sequence");
    return best;
}

// Repeated difference_inverse until a non-invertible (EEOO) sequence shows
// up; the chain starts with s itself and is finite.
inline std::vector<ExtraTrib> invert_chain(const ExtraTrib& s, size_t cap = 256) {
    std::vector<ExtraTrib> chain{s};
    while (chain.size() < cap) {
        auto inv = difference_inverse(chain.back());
        if (!inv) return chain;
        chain.push_back(std::move(*inv));
    }
    throw std::logic_error("invert_chain: no EEOO sequence within cap");
}

// The row sequence of the array: garden terms anchored at index 0.
inline ExtraTrib row_sequence(size_t r) {
    return ExtraTrib(0, entry(r, 1), entry(r, 2), entry(r, 3));
}

inline std::vector<long long> invertible_rows(size_t count) {
    std::vector<long long> out;
    for (size_t r = 1; out.size() < count; ++r)
        if (parity_type(row_sequence(r)) != ParityType::EEOO)
            out.push_back(static_cast<long long>(r));
    return out;
}

inline std::vector<long long> noninvertible_rows(size_t count) {
    std::vector<long long> out;
    for (size_t r = 1; out.size() < count; ++r)
        if (parity_type(row_sequence(r)) == ParityType::EEOO)
            out.push_back(static_cast<long long>(r));
    return out;
}

// ---------------------------------------------------------------------------
// Locating sequences in the array
// ---------------------------------------------------------------------------

struct LocateResult {
    BigInt row;
    long long start_index;  // term(start_index) = entry(row, 1)

    friend bool operator==(const LocateResult& a, const LocateResult& b) {
        return a.row == b.row && a.start_index == b.start_index;
    }
};

// Algorithm A: write a term of the sequence as the improper word
// [b, c-b, a] 0^{m-4} over a window (a, b, c) with a, b >= 0 and c >= b,
// canonize with the minimal padding, and read the row off the result.
inline LocateResult locate_canonization(const ExtraTrib& s) {
    // One step past the first all-positive triple every window (a, b, c) has
    // a, b > 0 and c = a + b + (previous positive) > b, as the word needs.
    long long i = first_positive_triple(s, 4000) + 1;
    BigInt a = s.term(i), b = s.term(i + 1), c = s.term(i + 2);
    TribDigits word;
    word.digits = {b, c - b, a};
    auto [canon, zeros_added] = canonize_padded(word);
    size_t z = canon.trailing_zeros();
    TribDigits stripped = canon.dropped_last(z);
    BigInt fc_value = evaluate(stripped);
    LocateResult res;
    res.row = row_number(fc_value);
    res.start_index = i + 4 + static_cast<long long>(zeros_added) - static_cast<long long>(z);
    return res;
}

// Algorithm B: scan for the wall signature — a term w followed by
// out(w) - 1 whose next two terms continue by the successor map. The wall
// sits in the nonnegative stretch below the garden, so the sweep starts at
// the leftward sign break; it ends once the scan sits on a run of plain
// successor steps, which only happens inside the garden. Returns nothing
// when no sign break shows up within the cap (the caller falls back to the
// canonization route).
inline std::optional<LocateResult> locate_wall_scan(const ExtraTrib& s, long long cap = 10000) {
    long long p0 = first_positive_triple(s, cap);
    long long lo = p0;
    {
        BigInt a = s.term(p0), b = s.term(p0 + 1), c = s.term(p0 + 2);
        long long walked = 0;
        for (;; ++walked) {
            if (walked >= cap) return std::nullopt;
            BigInt prev = c - b - a;  // term(lo - 1)
            bool negative = prev.sign() < 0;
            c = std::move(b);
            b = std::move(a);
            a = std::move(prev);
            --lo;
            if (negative) break;
        }
    }
    std::optional<long long> best;
    long long garden_run = 0;
    long long j = lo;
    // rolling window t0..t3 = terms at j..j+3
    BigInt t0 = s.term(j), t1 = s.term(j + 1), t2 = s.term(j + 2), t3 = s.term(j + 3);
    for (; j <= p0 + cap; ++j) {
        if (t0.sign() >= 0) {
            BigInt out_w = successor(t0);
            if (t1 == out_w - BigInt(1) && t1.sign() > 0 && t2 == successor(t1) &&
                t3 == successor(t2)) {
                best = j;
                garden_run = 0;
            } else if (best && t1 == out_w) {
                if (++garden_run >= 8) break;  // deep in the garden; signature cannot recur
            } else {
                garden_run = 0;
            }
        }
        BigInt t4 = t1 + t2 + t3;
        t0 = std::move(t1);
        t1 = std::move(t2);
        t2 = std::move(t3);
        t3 = std::move(t4);
    }
    if (!best) return std::nullopt;
    LocateResult res;
    res.row = row_number(s.term(*best + 1));
    res.start_index = *best + 1;
    return res;
}

// Both algorithms; they must agree whenever the wall scan lands (it bows out
// only when the leftward sign break lies beyond its cap).
inline LocateResult locate(const ExtraTrib& s) {
    LocateResult a = locate_canonization(s);
    auto b = locate_wall_scan(s);
    if (b && !(a == *b))
        throw std::logic_error("locate: canonization and wall scan disagree (row " +
                               a.row.to_string() + " vs " + b->row.to_string() + ")");
    return a;
}

// ---------------------------------------------------------------------------
// Multiples
// ---------------------------------------------------------------------------

struct MultipleRow {
    long long k;
    BigInt row;
    BigInt first_column_value;
};

// Rows holding k*s for k = 1..n_max, found by injecting the digit k into the
// canonical word of the base row's first-column value. Rows must increase.
inline std::vector<MultipleRow> multiples_table(const ExtraTrib& s, long long n_max) {
    LocateResult base = locate_canonization(s);
    BigInt fc = entry(static_cast<size_t>(base.row.to_int64()), 1);
    TribDigits word = to_canonical(fc);
    std::vector<MultipleRow> out;
    for (long long k = 1; k <= n_max; ++k) {
        TribDigits injected = word;
        for (auto& d : injected.digits)
            if (!d.is_zero()) d = BigInt(k);
        auto [canon, zeros] = canonize_padded(injected);
        (void)zeros;
        TribDigits stripped = canon.dropped_last(canon.trailing_zeros());
        BigInt v = evaluate(stripped);
        out.push_back({k, row_number(v), v});
    }
    return out;
}

// Row numbers of multiples are 1 modulo the multiplier.
inline VerifyResult row_mod_check(const ExtraTrib& s, long long n_max) {
    VerifyResult res;
    auto rows = multiples_table(s, n_max);
    for (const auto& m : rows) {
        BigInt rem = (m.row - BigInt(1)) % BigInt(m.k);
        if (!rem.is_zero()) {
            res.fail("row " + m.row.to_string() + " for multiple " + std::to_string(m.k));
            break;
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// Leftward behavior
// ---------------------------------------------------------------------------

struct LeftSignsReport {
    long long first_negative_index;
    BigInt first_negative_value;
    bool no_three_same_sign;  // over the checked window left of the first negative
};

// Extending left always reaches a negative term, after which no three
// consecutive terms share a sign.
inline LeftSignsReport left_signs(const ExtraTrib& s, long long window = 200,
                                  long long search_cap = 100000) {
    long long hi = first_positive_triple(s);
    long long j = hi;
    long long seen = 0;
    while (s.term(j).sign() >= 0) {
        --j;
        if (++seen > search_cap)
            throw std::logic_error("left_signs: no negative term within cap");
    }
    LeftSignsReport rep;
    rep.first_negative_index = j;
    rep.first_negative_value = s.term(j);
    rep.no_three_same_sign = true;
    auto vals = s.terms(j - window - 2, j);
    for (size_t i = 0; i + 2 < vals.size(); ++i) {
        int s0 = vals[i].sign(), s1 = vals[i + 1].sign(), s2 = vals[i + 2].sign();
        if ((s0 > 0 && s1 > 0 && s2 > 0) || (s0 < 0 && s1 < 0 && s2 < 0)) {
            rep.no_three_same_sign = false;
            break;
        }
    }
    return rep;
}

struct ReversalWitness {
    long long index;              // reversal index m of the first of four terms
    std::array<BigInt, 4> terms;  // |S_{-m}|, |S_{-m-1}|, |S_{-m-2}|, |S_{-m-3}|
};

// The reversal R_m = |S_{-m}| is never an extraTrib: four consecutive
// reversal terms violating the rule, drawn from the sign-breaking region at
// and left of the first negative term (where the Fibonacci analog would have
// satisfied the rule).
inline ReversalWitness reversal_is_extratrib(const ExtraTrib& s, long long scan = 80) {
    LeftSignsReport rep = left_signs(s, 10);
    long long jneg = rep.first_negative_index;
    // reversal index m corresponds to original index -m; walking m upward
    // walks the original sequence leftward from just right of jneg
    for (long long m = -jneg - 2; m <= -jneg + scan; ++m) {
        BigInt r0 = s.term(-m).abs();
        BigInt r1 = s.term(-(m + 1)).abs();
        BigInt r2 = s.term(-(m + 2)).abs();
        BigInt r3 = s.term(-(m + 3)).abs();
        if (r3 != r0 + r1 + r2) return ReversalWitness{m, {r0, r1, r2, r3}};
    }
    throw std::logic_error("reversal_is_extratrib: no witness in scan window");
}

// ---------------------------------------------------------------------------
// Difference rows
// ---------------------------------------------------------------------------

// Row of the array holding the difference sequence of row r, computed by
// digitwise convolution of the first-column word with 11 followed by
// canonization (base-free multiplication).
inline BigInt diff_row_map(size_t r) {
    TribDigits w = to_canonical(first_column(r));
    size_t L = w.size();
    TribDigits conv;
    conv.digits.assign(L + 1, BigInt(0));
    for (size_t i = 0; i <= L; ++i) {
        BigInt v;
        if (i >= 1) v += w.digits[i - 1];
        if (i <= L - 1) v += w.digits[i];
        conv.digits[i] = v;
    }
    auto [canon, zeros] = canonize_padded(conv);
    (void)zeros;
    TribDigits stripped = canon.dropped_last(canon.trailing_zeros());
    return row_number(evaluate(stripped));
}

// Iterated diff_row_map starting from row 1: 1, 2, 3, 7, 19, 29, 81, ...
inline std::vector<BigInt> diff_row_chain(size_t count) {
    std::vector<BigInt> out;
    BigInt r(1);
    for (size_t i = 0; i < count; ++i) {
        out.push_back(r);
        r = diff_row_map(static_cast<size_t>(r.to_int64()));
    }
    return out;
}

}  // namespace trithoff
