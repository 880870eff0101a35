#pragma once

// Tribonacci numeration: the numbers themselves, greedy representations,
// evaluation, the successor map, the canonization rewriting procedure, and
// the base-U row-number formula.
//
// Digit strings are most-significant-digit first. The digit at position k
// counted from the right (0-based) weighs tribonacci(k + 3), so the weights
// run 1, 2, 4, 7, 13, ...

#include <cstdint>
#include <initializer_list>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trithoff/bigint.hpp"
#include "trithoff/errors.hpp"

namespace trithoff {

// ---------------------------------------------------------------------------
// Tribonacci numbers
// ---------------------------------------------------------------------------

namespace detail {

struct TribCache {
    std::mutex mu;
    std::vector<BigInt> vals{BigInt(0), BigInt(0), BigInt(1)};
};

inline TribCache& trib_cache() {
    static TribCache c;
    return c;
}

// int64 table of Tribonacci numbers, as far as they fit.
inline const std::vector<long long>& tribs64() {
    static const std::vector<long long> t = [] {
        std::vector<long long> v{0, 0, 1};
        for (;;) {
            unsigned long long a = static_cast<unsigned long long>(v[v.size() - 1]) +
                                   static_cast<unsigned long long>(v[v.size() - 2]);
            unsigned long long b = a + static_cast<unsigned long long>(v[v.size() - 3]);
            if (b > 0x7fffffffffffffffULL || b < a) break;
            v.push_back(static_cast<long long>(b));
        }
        return v;
    }();
    return t;
}

// Canonical word of a nonnegative int64 as a bitmask: bit k set <=> digit at
// position k (weight tribonacci(k+3)) is 1. Zero maps to mask 0.
inline unsigned long long trib_mask64(long long n) {
    const auto& T = tribs64();
    unsigned long long mask = 0;
    size_t i = T.size() - 1;
    while (n > 0) {
        while (T[i] > n) --i;
        mask |= 1ULL << (i - 3);
        n -= T[i];
    }
    return mask;
}

inline long long eval_mask64(unsigned long long mask) {
    const auto& T = tribs64();
    long long v = 0;
    while (mask) {
        int k = __builtin_ctzll(mask);
        v += T[k + 3];
        mask &= mask - 1;
    }
    return v;
}

// Successor for values whose shifted word still fits in int64.
inline long long successor64(long long n) {
    return eval_mask64(trib_mask64(n) << 1);
}

}  // namespace detail

// T_0 = T_1 = 0, T_2 = 1, T_n = T_{n-1} + T_{n-2} + T_{n-3}.
inline BigInt tribonacci(size_t n) {
    auto& c = detail::trib_cache();
    std::lock_guard<std::mutex> lock(c.mu);
    while (c.vals.size() <= n) {
        size_t k = c.vals.size();
        c.vals.push_back(c.vals[k - 1] + c.vals[k - 2] + c.vals[k - 3]);
    }
    return c.vals[n];
}

// ---------------------------------------------------------------------------
// Digit words
// ---------------------------------------------------------------------------

struct TribDigits {
    std::vector<BigInt> digits;  // most-significant first

    TribDigits() = default;
    explicit TribDigits(std::vector<BigInt> d) : digits(std::move(d)) {}

    static TribDigits from_ints(std::initializer_list<long long> d) {
        TribDigits w;
        for (long long x : d) w.digits.emplace_back(x);
        return w;
    }

    size_t size() const { return digits.size(); }

    // digit at position k from the right
    const BigInt& at_pos(size_t k) const { return digits[digits.size() - 1 - k]; }

    bool is_proper() const {
        for (const auto& d : digits)
            if (d > BigInt(1) || d.is_negative()) return false;
        return true;
    }

    bool is_canonical() const {
        if (!is_proper()) return false;
        if (digits.empty()) return false;
        if (digits.size() > 1 && digits.front().is_zero()) return false;
        for (size_t i = 0; i + 2 < digits.size(); ++i)
            if (!digits[i].is_zero() && !digits[i + 1].is_zero() && !digits[i + 2].is_zero())
                return false;
        return true;
    }

    bool is_improper() const {
        for (const auto& d : digits)
            if (d > BigInt(1)) return true;
        return false;
    }

    size_t trailing_zeros() const {
        size_t z = 0;
        while (z < digits.size() && digits[digits.size() - 1 - z].is_zero()) ++z;
        return z;
    }

    TribDigits dropped_last(size_t count) const {
        TribDigits w;
        if (count < digits.size())
            w.digits.assign(digits.begin(), digits.end() - count);
        return w;
    }

    TribDigits appended_zeros(size_t count) const {
        TribDigits w = *this;
        for (size_t i = 0; i < count; ++i) w.digits.emplace_back(0);
        return w;
    }

    TribDigits without_leading_zeros() const {
        size_t i = 0;
        while (i + 1 < digits.size() && digits[i].is_zero()) ++i;
        TribDigits w;
        w.digits.assign(digits.begin() + i, digits.end());
        return w;
    }

    // Plain text, most-significant first; digits above 9 in parentheses.
    std::string to_string() const {
        if (digits.empty()) return "0";
        std::string s;
        for (const auto& d : digits) {
            std::string t = d.to_string();
            if (t.size() == 1)
                s += t;
            else
                s += "(" + t + ")";
        }
        return s;
    }

    static TribDigits parse(std::string_view s) {
        TribDigits w;
        size_t i = 0;
        while (i < s.size()) {
            if (s[i] == '(') {
                size_t j = s.find(')', i);
                if (j == std::string_view::npos) throw std::invalid_argument("unbalanced '('");
                w.digits.emplace_back(BigInt(s.substr(i + 1, j - i - 1)));
                i = j + 1;
            } else if (s[i] >= '0' && s[i] <= '9') {
                w.digits.emplace_back(static_cast<long long>(s[i] - '0'));
                ++i;
            } else {
                throw std::invalid_argument("bad character in digit string");
            }
        }
        return w;
    }

    friend bool operator==(const TribDigits& a, const TribDigits& b) {
        return a.digits == b.digits;
    }
};

inline BigInt evaluate(const TribDigits& w) {
    BigInt v;
    for (size_t k = 0; k < w.size(); ++k) {
        const BigInt& d = w.at_pos(k);
        if (!d.is_zero()) v += d * tribonacci(k + 3);
    }
    return v;
}

inline TribDigits to_canonical(const BigInt& n) {
    if (n.is_negative()) throw std::domain_error("to_canonical: negative value");
    if (n.is_zero()) return TribDigits::from_ints({0});
    size_t top = 3;
    while (tribonacci(top + 1) <= n) ++top;
    TribDigits w;
    w.digits.assign(top - 2, BigInt(0));
    BigInt rest = n;
    size_t i = top;
    while (!rest.is_zero()) {
        while (tribonacci(i) > rest) --i;
        w.digits[w.size() - 1 - (i - 3)] = BigInt(1);
        rest -= tribonacci(i);
    }
    return w;
}

inline TribDigits to_canonical(long long n) { return to_canonical(BigInt(n)); }

// out(n): shift the canonical representation one position left; out(0) = 0.
inline BigInt successor(const BigInt& n) {
    if (n.is_zero()) return BigInt();
    return evaluate(to_canonical(n).appended_zeros(1));
}

inline BigInt successor_k(const BigInt& n, size_t k) {
    if (n.is_zero() || k == 0) return n;
    TribDigits w = to_canonical(n).appended_zeros(k);
    return evaluate(w);
}

// ---------------------------------------------------------------------------
// Canonization
// ---------------------------------------------------------------------------

enum class CanonizeRule { Step1Carry, Step2a, Step2b };

inline const char* to_string(CanonizeRule r) {
    switch (r) {
        case CanonizeRule::Step1Carry: return "Step1-carry";
        case CanonizeRule::Step2a: return "Step2a";
        case CanonizeRule::Step2b: return "Step2b";
    }
    return "?";
}

struct CanonizeStep {
    CanonizeRule rule;
    size_t position;  // position from the right of the leftmost rewritten digit
    BigInt weight_before;
    BigInt weight_after;
};

struct CanonizeTrace {
    std::vector<CanonizeStep> steps;
    TribDigits final;
};

// Weight per the rewriting measure: sum of the digits strictly to the right
// of the last 0 preceding the improper boundary (leftmost digit exceeding 1).
// Proper words weigh 0.
inline BigInt weight(const TribDigits& w) {
    size_t boundary = w.size();
    for (size_t i = 0; i < w.size(); ++i) {
        if (w.digits[i] > BigInt(1)) {
            boundary = i;
            break;
        }
    }
    if (boundary == w.size()) return BigInt();
    size_t first = 0;  // index just right of the last 0 before the boundary
    for (size_t i = boundary; i-- > 0;) {
        if (w.digits[i].is_zero()) {
            first = i + 1;
            break;
        }
    }
    BigInt s;
    for (size_t i = first; i < w.size(); ++i) s += w.digits[i];
    return s;
}

namespace detail {

inline bool digit_pos(long long d) { return d > 0; }
inline bool digit_over1(long long d) { return d > 1; }
inline bool digit_pos(const BigInt& d) { return d.sign() > 0; }
inline bool digit_over1(const BigInt& d) { return d > BigInt(1); }

// Rewriting engine with bitset indexes for "positive triple starts here" and
// "digit exceeds one". The word occupies a fixed buffer with a zero margin
// on the left, so carries never reallocate. Digit = long long on the fast
// path, BigInt when any input digit is outlandish.
template <class Digit>
struct CanonEngine {
    std::vector<Digit> d;
    size_t margin;                  // leading zero slack
    size_t n;                       // d.size()
    std::vector<uint64_t> triple;   // bit i: d[i],d[i+1],d[i+2] all > 0
    std::vector<uint64_t> over1;    // bit i: d[i] > 1

    static bool get(const std::vector<uint64_t>& bs, size_t i) {
        return (bs[i >> 6] >> (i & 63)) & 1u;
    }
    static void put(std::vector<uint64_t>& bs, size_t i, bool v) {
        if (v)
            bs[i >> 6] |= 1ULL << (i & 63);
        else
            bs[i >> 6] &= ~(1ULL << (i & 63));
    }
    static size_t find_first(const std::vector<uint64_t>& bs) {
        for (size_t w = 0; w < bs.size(); ++w)
            if (bs[w]) return w * 64 + static_cast<size_t>(__builtin_ctzll(bs[w]));
        return static_cast<size_t>(-1);
    }

    void refresh(size_t lo, size_t hi) {  // closed range of digit indexes
        size_t tlo = lo >= 2 ? lo - 2 : 0;
        for (size_t i = tlo; i <= hi && i < n; ++i) {
            if (i + 2 < n)
                put(triple, i, digit_pos(d[i]) && digit_pos(d[i + 1]) && digit_pos(d[i + 2]));
            put(over1, i, digit_over1(d[i]));
        }
    }

    explicit CanonEngine(const std::vector<Digit>& word, size_t left_margin) {
        margin = left_margin;
        d.assign(word.size() + margin, Digit(0));
        for (size_t i = 0; i < word.size(); ++i) d[margin + i] = word[i];
        n = d.size();
        size_t words = (n + 63) / 64;
        triple.assign(words, 0);
        over1.assign(words, 0);
        refresh(0, n - 1);
    }

    // Runs the procedure; records (rule, leftmost changed index) pairs.
    // Throws InsufficientTrailingZeros when a Step-2 window would pass the
    // right end.
    std::vector<std::pair<CanonizeRule, size_t>> run() {
        std::vector<std::pair<CanonizeRule, size_t>> steps;
        for (size_t guard = 0;; ++guard) {
            if (guard > 50000000) throw std::logic_error("canonize: step limit exceeded");
            const Digit one(1), two(2);
            size_t t = find_first(triple);
            if (t != static_cast<size_t>(-1)) {
                if (t == 0) throw std::logic_error("canonize: left margin exhausted");
                d[t - 1] += one;
                d[t] -= one;
                d[t + 1] -= one;
                d[t + 2] -= one;
                refresh(t - 1, t + 2);
                steps.emplace_back(CanonizeRule::Step1Carry, t - 1);
                continue;
            }
            size_t p = find_first(over1);
            if (p == static_cast<size_t>(-1)) break;
            if (p + 3 >= n) throw InsufficientTrailingZeros();
            if (p < 2) throw std::logic_error("canonize: left margin exhausted");
            if (d[p - 1] == one) {
                // boundary preceded by 01; Step 1 exhaustion forces a 0 both
                // two places left and immediately right
                if (digit_pos(d[p - 2]))
                    throw std::logic_error("canonize: boundary preceded by 11 after Step 1");
                if (digit_pos(d[p + 1]))
                    throw std::logic_error("canonize: nonzero after boundary in 01 context");
                // 0 1 a 0 c e -> 1 0 (a-2) 0 (c+1) (e+1)
                d[p - 2] = one;
                d[p - 1] = Digit(0);
                d[p] -= two;
                d[p + 2] += one;
                d[p + 3] += one;
                refresh(p - 2, p + 3);
                steps.emplace_back(CanonizeRule::Step2b, p - 2);
            } else {
                // 0 a b c e -> 1 (a-2) b c (e+1)
                d[p - 1] = one;
                d[p] -= two;
                d[p + 3] += one;
                refresh(p - 1, p + 3);
                steps.emplace_back(CanonizeRule::Step2a, p - 1);
            }
        }
        return steps;
    }

    TribDigits word() const {
        std::vector<BigInt> out;
        size_t i = 0;
        while (i + 1 < n && !digit_pos(d[i])) ++i;
        for (; i < n; ++i) out.emplace_back(d[i]);
        return TribDigits(std::move(out));
    }
};

// Margin generous enough for any canonical result of the same value: the
// canonical length exceeds the input length by at most the bit length of the
// total digit sum plus a few positions.
inline size_t canon_margin(const TribDigits& word) {
    BigInt sum;
    for (const auto& x : word.digits) sum += x;
    return 2 * sum.bit_length() + 8;
}

}  // namespace detail

// Applies one recorded rewrite to a word, extending it on the left when the
// step writes into the conceptual zero padding. Used for trace replay.
inline void apply_step(TribDigits& w, CanonizeRule rule, size_t position) {
    size_t span = rule == CanonizeRule::Step1Carry ? 4 : rule == CanonizeRule::Step2a ? 5 : 6;
    while (w.size() < position + 1) w.digits.insert(w.digits.begin(), BigInt(0));
    size_t i = w.size() - 1 - position;  // leftmost changed index
    if (i + span > w.size()) throw std::logic_error("apply_step: step spans past right end");
    auto& d = w.digits;
    const BigInt one(1), two(2);
    switch (rule) {
        case CanonizeRule::Step1Carry:
            d[i] += one;
            d[i + 1] -= one;
            d[i + 2] -= one;
            d[i + 3] -= one;
            break;
        case CanonizeRule::Step2a:
            d[i] += one;
            d[i + 1] -= two;
            d[i + 4] += one;
            break;
        case CanonizeRule::Step2b:
            d[i] += one;
            d[i + 1] -= one;
            d[i + 2] -= two;
            d[i + 4] += one;
            d[i + 5] += one;
            break;
    }
    for (const auto& dg : d)
        if (dg.is_negative()) throw std::logic_error("apply_step: negative digit");
}

// One canonization pass. Step 1 (leftmost carry) has priority; otherwise a
// Step-2 rewrite happens at the leftmost improper boundary, chosen by the
// digit context to its left. The word may grow to the left; it never grows
// to the right, and a Step-2 rewrite that would reach past the right end
// throws InsufficientTrailingZeros.
inline std::pair<TribDigits, CanonizeTrace> canonize(const TribDigits& input,
                                                     bool track_weights = true) {
    bool small = true;
    for (const auto& dg : input.digits) {
        if (dg.is_negative()) throw std::domain_error("canonize: negative digit");
        // leave slack below int64 for the increments the rewrites add
        if (dg.bit_length() > 56) small = false;
    }
    size_t margin = detail::canon_margin(input);

    std::vector<std::pair<CanonizeRule, size_t>> raw;
    CanonizeTrace trace;
    size_t n;
    if (small) {
        std::vector<long long> word;
        word.reserve(input.size());
        for (const auto& dg : input.digits) word.push_back(dg.to_int64());
        detail::CanonEngine<long long> eng(word, margin);
        raw = eng.run();
        trace.final = eng.word();
        n = eng.n;
    } else {
        detail::CanonEngine<BigInt> eng(input.digits, margin);
        raw = eng.run();
        trace.final = eng.word();
        n = eng.n;
    }
    trace.steps.reserve(raw.size());
    for (auto& [rule, idx] : raw) {
        CanonizeStep st;
        st.rule = rule;
        st.position = n - 1 - idx;
        trace.steps.push_back(std::move(st));
    }
    if (track_weights && !trace.steps.empty()) {
        // replay to capture the weight before and after every step
        TribDigits cur = input;
        for (auto& st : trace.steps) {
            st.weight_before = weight(cur);
            apply_step(cur, st.rule, st.position);
            st.weight_after = weight(cur);
        }
    }
    return {trace.final, trace};
}

// Smallest k such that canonize(w * 0^k) succeeds; k never exceeds three
// times the weight of w, and success is monotone in k, so a binary search
// finds the smallest viable padding.
inline std::pair<TribDigits, size_t> canonize_padded(const TribDigits& w) {
    BigInt wt = weight(w);
    if (!wt.fits_int64()) throw std::domain_error("canonize_padded: weight too large");
    size_t hi = 3 * static_cast<size_t>(wt.to_int64());

    auto attempt = [&w](size_t k) -> std::pair<bool, TribDigits> {
        try {
            auto [res, trace] = canonize(w.appended_zeros(k), false);
            (void)trace;
            return {true, res};
        } catch (const InsufficientTrailingZeros&) {
            return {false, TribDigits()};
        }
    };

    auto top = attempt(hi);
    if (!top.first) throw std::logic_error("canonize_padded: 3*weight zeros were not enough");
    size_t lo = 0;
    TribDigits best = top.second;
    size_t best_k = hi;
    while (lo < best_k) {
        size_t mid = lo + (best_k - lo) / 2;
        auto r = attempt(mid);
        if (r.first) {
            best = r.second;
            best_k = mid;
        } else {
            lo = mid + 1;
        }
    }
    return {best, best_k};
}

// ---------------------------------------------------------------------------
// Base U and row numbers
// ---------------------------------------------------------------------------

// Weights 0, 1, 2, 3, 6, 11, ... (the extended second row of the array).
inline BigInt eval_base_u(const TribDigits& w) {
    std::vector<BigInt> u{BigInt(0), BigInt(1), BigInt(2)};
    while (u.size() < w.size()) {
        size_t k = u.size();
        u.push_back(u[k - 1] + u[k - 2] + u[k - 3]);
    }
    BigInt v;
    for (size_t k = 0; k < w.size(); ++k) {
        const BigInt& dg = w.at_pos(k);
        if (!dg.is_zero()) v += dg * u[k];
    }
    return v;
}

// Row of the Trithoff array whose first column holds v; v's canonical word
// must end in 1. Equals [a1]_T - [a]_T for (v)_T = a1.
inline BigInt row_number(const BigInt& v) {
    TribDigits w = to_canonical(v);
    if (w.at_pos(0).is_zero())
        throw NotFirstColumn("row_number: representation of " + v.to_string() + " ends in 0");
    return v - evaluate(w.dropped_last(1));
}

}  // namespace trithoff
