#pragma once

// The Trithoff array: column 1 holds the integers whose representation ends
// in 1, each row continues by the successor map, and the Tribonacci rule
// extends every row left through the wall (column 0), seed (-1), and
// pre-seed (-2).

#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "trithoff/alpha.hpp"
#include "trithoff/bigint.hpp"
#include "trithoff/dyadic.hpp"
#include "trithoff/numeration.hpp"

namespace trithoff {

namespace detail {

struct FirstColCache {
    std::mutex mu;
    std::vector<long long> vals;  // vals[r-1] = first column of row r
    long long next_candidate = 1;
};

inline FirstColCache& first_col_cache() {
    static FirstColCache c;
    return c;
}

inline long long first_column64(size_t r) {
    auto& c = first_col_cache();
    std::lock_guard<std::mutex> lock(c.mu);
    while (c.vals.size() < r) {
        long long v = c.next_candidate++;
        if (trib_mask64(v) & 1) c.vals.push_back(v);
    }
    return c.vals[r - 1];
}

struct Precolumns64 {
    long long wall, seed, preseed;
};

// With (first column)_T = a b c 1: wall = [abc]+1, seed = [ab]+c, pre-seed = [a]+b.
inline Precolumns64 precolumns64(long long first_col) {
    unsigned long long m = trib_mask64(first_col);
    Precolumns64 p;
    p.wall = eval_mask64(m >> 1) + 1;
    p.seed = eval_mask64(m >> 2) + ((m >> 1) & 1);
    p.preseed = eval_mask64(m >> 3) + ((m >> 2) & 1);
    return p;
}

struct EntryMemo {
    std::mutex mu;
    std::unordered_map<unsigned long long, BigInt> map;
    static constexpr size_t cap = 1 << 16;
};

inline EntryMemo& entry_memo() {
    static EntryMemo m;
    return m;
}

}  // namespace detail

inline BigInt first_column(size_t r) {
    if (r < 1) throw std::domain_error("first_column: rows start at 1");
    return BigInt(detail::first_column64(r));
}

// Entry at row r >= 1 and column c >= -2. Garden columns iterate the
// successor; the three precolumns come from the representation of column 1.
inline BigInt entry(size_t r, long long c) {
    if (r < 1 || c < -2) throw std::domain_error("entry: row >= 1 and column >= -2");
    long long fc = detail::first_column64(r);
    if (c == 1) return BigInt(fc);
    if (c <= 0) {
        auto p = detail::precolumns64(fc);
        return BigInt(c == 0 ? p.wall : c == -1 ? p.seed : p.preseed);
    }
    bool memoizable = static_cast<unsigned long long>(c) < 256;
    unsigned long long key = (static_cast<unsigned long long>(r) << 8) |
                             static_cast<unsigned long long>(c);
    auto& memo = detail::entry_memo();
    if (memoizable) {
        std::lock_guard<std::mutex> lock(memo.mu);
        auto it = memo.map.find(key);
        if (it != memo.map.end()) return it->second;
    }
    BigInt v = successor_k(BigInt(fc), static_cast<size_t>(c - 1));
    if (memoizable) {
        std::lock_guard<std::mutex> lock(memo.mu);
        if (memo.map.size() >= detail::EntryMemo::cap) memo.map.clear();
        memo.map.emplace(key, v);
    }
    return v;
}

inline std::vector<BigInt> column_stream(long long c, size_t count) {
    std::vector<BigInt> out;
    out.reserve(count);
    for (size_t r = 1; r <= count; ++r) out.push_back(entry(r, c));
    return out;
}

inline std::vector<BigInt> column2_stream(size_t count) { return column_stream(2, count); }

// Values appearing exactly once in the seed column, ascending.
inline std::vector<long long> seed_not_doubled(size_t count) {
    std::vector<long long> out;
    long long prev = -1;
    size_t run = 0;
    for (size_t r = 1; out.size() < count; ++r) {
        long long s = detail::precolumns64(detail::first_column64(r)).seed;
        if (s == prev) {
            ++run;
        } else {
            if (run == 1) out.push_back(prev);
            prev = s;
            run = 1;
        }
    }
    return out;
}

inline std::vector<int> first_column_diffs(size_t count) {
    std::vector<int> out;
    out.reserve(count);
    for (size_t r = 1; r <= count; ++r)
        out.push_back(static_cast<int>(detail::first_column64(r + 1) -
                                       detail::first_column64(r)));
    return out;
}

// Row indices r where the first column steps by 3 (sequence of a+b letter
// position sums).
inline std::vector<long long> first_column_diff3_positions(size_t count) {
    std::vector<long long> out;
    for (size_t r = 1; out.size() < count; ++r)
        if (detail::first_column64(r + 1) - detail::first_column64(r) == 3)
            out.push_back(static_cast<long long>(r));
    return out;
}

// ---------------------------------------------------------------------------
// Structure facts
// ---------------------------------------------------------------------------

struct VerifyResult {
    bool pass = true;
    std::string counterexample;

    void fail(std::string msg) {
        if (pass) {
            pass = false;
            counterexample = std::move(msg);
        }
    }
};

// Row-step structure: garden terms step by out, the wall steps by out - 1,
// and the seed->wall / pre-seed->seed increments split on the ending of the
// first garden term.
inline VerifyResult verify_fact5(size_t row_lo, size_t row_hi, size_t garden_cols = 5) {
    VerifyResult res;
    for (size_t r = row_lo; r <= row_hi && res.pass; ++r) {
        BigInt g = first_column(r);
        auto p = detail::precolumns64(g.to_int64());
        // 5Ta
        BigInt cur = g;
        for (size_t c = 1; c + 1 <= garden_cols; ++c) {
            BigInt nxt = entry(r, static_cast<long long>(c + 1));
            if (nxt != successor(cur)) {
                res.fail("5Ta row " + std::to_string(r) + " col " + std::to_string(c));
                break;
            }
            cur = nxt;
        }
        // 5Tc
        if (g != successor(BigInt(p.wall)) - BigInt(1))
            res.fail("5Tc row " + std::to_string(r));
        // 5Tb by the ending of (g)_T
        unsigned long long m = detail::trib_mask64(g.to_int64());
        long long w_expect, s_expect;
        if (m & 2) {  // ends 11
            w_expect = detail::successor64(p.seed);
            s_expect = detail::successor64(p.preseed) + 1;
        } else if (m & 4) {  // ends 101
            w_expect = detail::successor64(p.seed) + 1;
            s_expect = detail::successor64(p.preseed) - 1;
        } else {  // ends 001
            w_expect = detail::successor64(p.seed) + 1;
            s_expect = detail::successor64(p.preseed);
        }
        if (p.wall != w_expect || p.seed != s_expect)
            res.fail("5Tb row " + std::to_string(r));
    }
    return res;
}

// Occurrence counts of every integer 0..N across the garden, wall, seed and
// pre-seed. Scanning continues until each stream has passed N; precolumn
// values lag the first column by roughly alpha^3, so rows run well past the
// last garden row.
struct Census {
    long long bound = 0;
    std::vector<uint32_t> garden, wall, seed, preseed;
};

inline Census census(long long N) {
    Census cs;
    cs.bound = N;
    cs.garden.assign(N + 1, 0);
    cs.wall.assign(N + 1, 0);
    cs.seed.assign(N + 1, 0);
    cs.preseed.assign(N + 1, 0);
    for (size_t r = 1;; ++r) {
        long long fc = detail::first_column64(r);
        auto p = detail::precolumns64(fc);
        if (p.preseed > N && fc > N) break;  // pre-seed is the slowest column
        if (p.wall <= N) ++cs.wall[p.wall];
        if (p.seed <= N) ++cs.seed[p.seed];
        if (p.preseed <= N) ++cs.preseed[p.preseed];
        long long v = fc;
        while (v <= N) {
            ++cs.garden[v];
            v = detail::successor64(v);
            if (v == 0) break;
        }
    }
    return cs;
}

// r * alpha^c / (alpha - 1) with alpha taken to >= 30 significant digits.
inline DInterval estimate_entry(size_t r, unsigned c, size_t digits = 36) {
    size_t prec = static_cast<size_t>(digits * 3.322) + 16;
    DInterval a = alpha_bits(prec);
    DInterval num = ipow(a, c, prec).scaled(BigInt(static_cast<long long>(r)));
    return idiv(num, a - DInterval::exactly(1), prec);
}

}  // namespace trithoff
