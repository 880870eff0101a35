#pragma once

// Arbitrary-precision signed integers on 32-bit limbs.
// Small and self-contained; magnitudes are little-endian limb vectors,
// the sign lives next to them. Division is Knuth's algorithm D with
// 64-bit trial quotients.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trithoff {

class BigInt {
public:
    BigInt() : sign_(0) {}

    BigInt(long long v) : sign_(0) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long u = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
        while (u) {
            limbs_.push_back(static_cast<uint32_t>(u & 0xffffffffULL));
            u >>= 32;
        }
    }

    BigInt(unsigned long long v) : sign_(v ? 1 : 0) {
        while (v) {
            limbs_.push_back(static_cast<uint32_t>(v & 0xffffffffULL));
            v >>= 32;
        }
    }

    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned v) : BigInt(static_cast<unsigned long long>(v)) {}
    BigInt(long v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned long v) : BigInt(static_cast<unsigned long long>(v)) {}

    explicit BigInt(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("BigInt: empty string");
        bool neg = false;
        size_t i = 0;
        if (s[0] == '+' || s[0] == '-') {
            neg = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
        BigInt acc;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("BigInt: bad digit in string");
            acc = acc.mul_small(10);
            acc = acc + BigInt(s[i] - '0');
        }
        *this = acc;
        if (neg && sign_ != 0) sign_ = -1;
    }

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }

    bool is_even() const { return sign_ == 0 || (limbs_[0] & 1u) == 0; }

    size_t bit_length() const {
        if (sign_ == 0) return 0;
        size_t top = limbs_.size() - 1;
        uint32_t w = limbs_[top];
        size_t b = 0;
        while (w) { ++b; w >>= 1; }
        return top * 32 + b;
    }

    // Number of trailing zero bits; 0 for zero itself.
    size_t trailing_zero_bits() const {
        if (sign_ == 0) return 0;
        size_t i = 0;
        while (limbs_[i] == 0) ++i;
        uint32_t w = limbs_[i];
        size_t b = 0;
        while ((w & 1u) == 0) { ++b; w >>= 1; }
        return i * 32 + b;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    static int cmp(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = ucmp(a.limbs_, b.limbs_);
        return a.sign_ >= 0 ? c : -c;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.limbs_ = uadd(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            int c = ucmp(a.limbs_, b.limbs_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.limbs_ = usub(a.limbs_, b.limbs_);
                r.sign_ = a.sign_;
            } else {
                r.limbs_ = usub(b.limbs_, a.limbs_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.limbs_ = umul(a.limbs_, b.limbs_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    BigInt mul_small(uint32_t m) const {
        if (sign_ == 0 || m == 0) return BigInt();
        BigInt r;
        r.sign_ = sign_;
        r.limbs_.resize(limbs_.size() + 1, 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < limbs_.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(limbs_[i]) * m + carry;
            r.limbs_[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        r.limbs_.back() = static_cast<uint32_t>(carry);
        r.trim();
        return r;
    }

    // Quotient truncated toward zero, remainder with the sign of the dividend.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        int c = ucmp(a.limbs_, b.limbs_);
        if (c < 0) {
            q = BigInt();
            r = a;
            return;
        }
        std::vector<uint32_t> qm, rm;
        if (b.limbs_.size() == 1) {
            uint32_t rem;
            qm = udivmod_small(a.limbs_, b.limbs_[0], rem);
            rm.clear();
            if (rem) rm.push_back(rem);
        } else {
            udivmod(a.limbs_, b.limbs_, qm, rm);
        }
        q.limbs_ = std::move(qm);
        q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
        r.limbs_ = std::move(rm);
        r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    BigInt operator<<(size_t bits) const {
        if (sign_ == 0 || bits == 0) return *this;
        BigInt r;
        r.sign_ = sign_;
        size_t words = bits / 32, rem = bits % 32;
        r.limbs_.assign(limbs_.size() + words + 1, 0);
        for (size_t i = 0; i < limbs_.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(limbs_[i]) << rem;
            r.limbs_[i + words] |= static_cast<uint32_t>(cur);
            r.limbs_[i + words + 1] |= static_cast<uint32_t>(cur >> 32);
        }
        r.trim();
        return r;
    }

    // Arithmetic shift toward zero on the magnitude.
    BigInt operator>>(size_t bits) const {
        if (sign_ == 0) return *this;
        size_t words = bits / 32, rem = bits % 32;
        if (words >= limbs_.size()) return BigInt();
        BigInt r;
        r.sign_ = sign_;
        r.limbs_.assign(limbs_.begin() + words, limbs_.end());
        if (rem) {
            for (size_t i = 0; i + 1 < r.limbs_.size(); ++i)
                r.limbs_[i] = static_cast<uint32_t>((r.limbs_[i] >> rem) |
                                                    (static_cast<uint64_t>(r.limbs_[i + 1]) << (32 - rem)));
            r.limbs_.back() >>= rem;
        }
        r.trim();
        if (r.limbs_.empty()) r.sign_ = 0;
        return r;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<uint32_t> m = limbs_;
        std::string out;
        while (!m.empty()) {
            uint32_t rem;
            m = udivmod_small(m, 1000000000u, rem);
            if (m.empty()) {
                out.insert(0, std::to_string(rem));
            } else {
                std::string chunk = std::to_string(rem);
                out.insert(0, std::string(9 - chunk.size(), '0') + chunk);
            }
        }
        if (sign_ < 0) out.insert(0, "-");
        return out;
    }

    long long to_int64() const {
        if (sign_ == 0) return 0;
        if (limbs_.size() > 2) throw std::overflow_error("BigInt: does not fit in int64");
        unsigned long long u = limbs_[0];
        if (limbs_.size() == 2) u |= static_cast<unsigned long long>(limbs_[1]) << 32;
        if (sign_ > 0) {
            if (u > 0x7fffffffffffffffULL) throw std::overflow_error("BigInt: does not fit in int64");
            return static_cast<long long>(u);
        }
        if (u > 0x8000000000000000ULL) throw std::overflow_error("BigInt: does not fit in int64");
        return -static_cast<long long>(u - 1) - 1;
    }

    bool fits_int64() const {
        if (limbs_.size() < 2) return true;
        if (limbs_.size() > 2) return false;
        unsigned long long u = limbs_[0] | (static_cast<unsigned long long>(limbs_[1]) << 32);
        return sign_ > 0 ? u <= 0x7fffffffffffffffULL : u <= 0x8000000000000000ULL;
    }

private:
    std::vector<uint32_t> limbs_;  // little-endian, no trailing zero limbs
    int sign_;                     // -1, 0, +1

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) sign_ = 0;
    }

    static int ucmp(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> uadd(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
        const std::vector<uint32_t>& hi = a.size() >= b.size() ? a : b;
        const std::vector<uint32_t>& lo = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r(hi.size() + 1, 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < hi.size(); ++i) {
            uint64_t cur = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        r.back() = static_cast<uint32_t>(carry);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // requires a >= b
    static std::vector<uint32_t> usub(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            int64_t cur = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
            if (cur < 0) {
                cur += int64_t(1) << 32;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<uint32_t> umul(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size() + b.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            uint64_t carry = 0;
            uint64_t ai = a[i];
            for (size_t j = 0; j < b.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(r[i + j]) + ai * b[j] + carry;
                r[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            size_t k = i + b.size();
            while (carry) {
                uint64_t cur = static_cast<uint64_t>(r[k]) + carry;
                r[k] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<uint32_t> udivmod_small(const std::vector<uint32_t>& a, uint32_t d,
                                               uint32_t& rem) {
        std::vector<uint32_t> q(a.size(), 0);
        uint64_t r = 0;
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (r << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            r = cur % d;
        }
        rem = static_cast<uint32_t>(r);
        while (!q.empty() && q.back() == 0) q.pop_back();
        return q;
    }

    // Knuth algorithm D; requires b.size() >= 2 and |a| >= |b|.
    static void udivmod(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        // Normalize so the top limb of the divisor has its high bit set.
        int s = 0;
        uint32_t top = b.back();
        while (!(top & 0x80000000u)) {
            top <<= 1;
            ++s;
        }
        std::vector<uint32_t> u = shl_limbs(a, s);
        std::vector<uint32_t> v = shl_limbs(b, s);
        size_t n = v.size(), m = u.size() - n;
        u.resize(u.size() + 1, 0);
        q.assign(m + 1, 0);

        uint64_t vtop = v[n - 1];
        uint64_t vnext = v[n - 2];
        for (size_t j = m + 1; j-- > 0;) {
            uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            uint64_t qhat = num / vtop;
            uint64_t rhat = num - qhat * vtop;
            // after normalization qhat overshoots the true digit by at most 2;
            // any remaining overshoot of 1 is fixed by the add-back below
            while (qhat >= 0x100000000ULL ||
                   qhat * vnext > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += vtop;
                if (rhat >= 0x100000000ULL) break;
            }
            // multiply-subtract, with correction if qhat was one too large
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffULL) - borrow;
                if (t < 0) {
                    t += int64_t(1) << 32;
                    borrow = 1;
                } else {
                    borrow = 0;
                }
                u[i + j] = static_cast<uint32_t>(t);
            }
            int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
            if (t < 0) {
                t += int64_t(1) << 32;
                u[j + n] = static_cast<uint32_t>(t);
                --qhat;
                uint64_t add_carry = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t cur = static_cast<uint64_t>(u[i + j]) + v[i] + add_carry;
                    u[i + j] = static_cast<uint32_t>(cur);
                    add_carry = cur >> 32;
                }
                u[j + n] = static_cast<uint32_t>(u[j + n] + add_carry);
            } else {
                u[j + n] = static_cast<uint32_t>(t);
            }
            q[j] = static_cast<uint32_t>(qhat);
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        u.resize(n);
        r = shr_limbs(u, s);
    }

    static std::vector<uint32_t> shl_limbs(const std::vector<uint32_t>& a, int s) {
        if (s == 0) return a;
        std::vector<uint32_t> r(a.size() + 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(a[i]) << s;
            r[i] |= static_cast<uint32_t>(cur);
            r[i + 1] |= static_cast<uint32_t>(cur >> 32);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<uint32_t> shr_limbs(const std::vector<uint32_t>& a, int s) {
        std::vector<uint32_t> r = a;
        if (s) {
            for (size_t i = 0; i + 1 < r.size(); ++i)
                r[i] = static_cast<uint32_t>((r[i] >> s) | (static_cast<uint64_t>(r[i + 1]) << (32 - s)));
            if (!r.empty()) r.back() >>= s;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

inline BigInt pow(BigInt base, unsigned long long e) {
    BigInt r(1);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// floor(sqrt(n)) by Newton iteration; n must be nonnegative.
inline BigInt isqrt(const BigInt& n) {
    if (n.is_negative()) throw std::domain_error("isqrt: negative argument");
    if (n.is_zero()) return BigInt();
    BigInt x = BigInt(1) << ((n.bit_length() + 1) / 2);
    for (;;) {
        BigInt y = (x + n / x) >> 1;
        if (y >= x) break;
        x = y;
    }
    // x = floor(sqrt(n)) now; guard against off-by-one
    while (x * x > n) x = x - BigInt(1);
    while ((x + BigInt(1)) * (x + BigInt(1)) <= n) x = x + BigInt(1);
    return x;
}

inline std::string to_string(const BigInt& v) { return v.to_string(); }

}  // namespace trithoff
