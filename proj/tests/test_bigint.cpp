#include <doctest.h>

#include <random>

#include "trithoff/bigint.hpp"
#include "trithoff/dyadic.hpp"

using namespace trithoff;

namespace {

BigInt random_bigint(std::mt19937_64& rng, size_t max_limbs) {
    std::uniform_int_distribution<size_t> len(1, max_limbs);
    size_t n = len(rng);
    BigInt v;
    for (size_t i = 0; i < n; ++i) {
        v = (v << 32) + BigInt(static_cast<long long>(rng() & 0xffffffffULL));
    }
    if (rng() & 1) v = -v;
    return v;
}

}  // namespace

TEST_CASE("bigint small arithmetic and strings") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-123456789012345LL).to_string() == "-123456789012345");
    CHECK(BigInt("99999999999999999999999999").to_string() == "99999999999999999999999999");
    CHECK(BigInt("-42") + BigInt(42) == BigInt(0));
    CHECK(BigInt("1000000000000") * BigInt("1000000000000") == BigInt("1000000000000000000000000"));
    CHECK(BigInt(7).to_int64() == 7);
    CHECK(BigInt(-7).to_int64() == -7);
    CHECK_THROWS_AS((void)BigInt("12a").to_string(), std::invalid_argument);
    CHECK_THROWS_AS((void)(BigInt("123456789123456789123456789").to_int64()), std::overflow_error);
}

TEST_CASE("bigint string round trip") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        BigInt v = random_bigint(rng, 8);
        CHECK(BigInt(v.to_string()) == v);
    }
}

TEST_CASE("divmod identity a = q*b + r with |r| < |b| and sign(r) = sign(a)") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        BigInt a = random_bigint(rng, 10);
        BigInt b = random_bigint(rng, 4);
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("divmod by zero throws") {
    BigInt q, r;
    CHECK_THROWS_AS(BigInt::divmod(BigInt(1), BigInt(0), q, r), std::domain_error);
}

TEST_CASE("divmod survives trial-quotient corrections") {
    // divisor with a tiny top limb and all-ones patterns force the qhat
    // correction and add-back paths
    BigInt a{"5986310707901174928194975574885862231060292634148863"};
    BigInt b{"79228162532711081671548469249"};
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q == BigInt("75557863725914323419135"));
    CHECK(r == BigInt("79228162532711081671548469248"));
    CHECK(q * b + r == a);

    std::mt19937_64 rng(101);
    for (int t = 0; t < 2000; ++t) {
        size_t lb = 1 + rng() % 5;
        BigInt d;
        for (size_t i = 0; i < lb; ++i) {
            unsigned long long limb = rng() % 3 == 0 ? (rng() % 2 ? 0xffffffffULL : 0x80000000ULL)
                                                     : (rng() % 2 ? 1ULL : rng() & 0xffffffffULL);
            d = (d << 32) + BigInt(static_cast<long long>(limb));
        }
        if (d.is_zero()) continue;
        BigInt n = (d << (rng() % 70)) + (rng() % 2 ? BigInt(1) : -BigInt(1));
        if (n.is_negative()) n = -n;
        BigInt qq, rr;
        BigInt::divmod(n, d, qq, rr);
        CHECK(qq * d + rr == n);
        CHECK(rr.abs() < d.abs());
    }
}

TEST_CASE("shifts agree with powers of two") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
        BigInt v = random_bigint(rng, 5).abs();
        size_t s = rng() % 130;
        CHECK((v << s) == v * pow(BigInt(2), s));
        CHECK((v >> s) == v / pow(BigInt(2), s));
    }
}

TEST_CASE("isqrt brackets") {
    std::mt19937_64 rng(17);
    CHECK(isqrt(BigInt(0)) == BigInt(0));
    CHECK(isqrt(BigInt(15)) == BigInt(3));
    CHECK(isqrt(BigInt(16)) == BigInt(4));
    for (int i = 0; i < 100; ++i) {
        BigInt v = random_bigint(rng, 6).abs();
        BigInt s = isqrt(v);
        CHECK(s * s <= v);
        CHECK((s + BigInt(1)) * (s + BigInt(1)) > v);
    }
}

TEST_CASE("trailing zero bits") {
    CHECK(BigInt(12).trailing_zero_bits() == 2);
    CHECK((BigInt(1) << 100).trailing_zero_bits() == 100);
    CHECK(BigInt(7).trailing_zero_bits() == 0);
}

TEST_CASE("dyadic ordering, rounding and decimal rendering") {
    Dyadic half(BigInt(1), -1);
    Dyadic quarter(BigInt(1), -2);
    CHECK(half > quarter);
    CHECK((half + quarter).to_decimal(3) == "0.750");
    CHECK((half * quarter).to_decimal(4) == "0.1250");
    CHECK((-half).to_decimal(2) == "-0.50");
    Dyadic third_low = div_down(Dyadic(1), Dyadic(3), 64);
    Dyadic third_high = div_up(Dyadic(1), Dyadic(3), 64);
    CHECK(third_low < third_high);
    CHECK(third_low.to_decimal(6) == "0.333333");
    CHECK(third_high.to_decimal(6) == "0.333333");
    Dyadic v(BigInt(1027), -10);  // slightly above 1
    CHECK(v.rounded(6, false) <= v);
    CHECK(v.rounded(6, true) >= v);
}

TEST_CASE("interval arithmetic keeps enclosures") {
    DInterval a(Dyadic(BigInt(3), -1), Dyadic(BigInt(13), -3));  // [1.5, 1.625]
    DInterval b = DInterval::exactly(2);
    DInterval sum = a + b;
    CHECK(sum.lo.to_decimal(3) == "3.500");
    CHECK(sum.hi.to_decimal(3) == "3.625");
    DInterval prod = a * DInterval(Dyadic(BigInt(-1), 0), Dyadic(BigInt(1), 0));
    CHECK(prod.lo.sign() < 0);
    CHECK(prod.hi.sign() > 0);
    CHECK(prod.contains_zero());
    DInterval sq = isqrt_interval(DInterval::exactly(2), 80);
    // sqrt(2) = 1.41421356...
    CHECK(sq.lo.to_decimal(8) == "1.41421356");
    CHECK(sq.hi.to_decimal(8) == "1.41421356");
    DInterval p = ipow(DInterval::exactly(3), 7, 128);
    CHECK(p.lo <= Dyadic(BigInt(2187), 0));
    CHECK(p.hi >= Dyadic(BigInt(2187), 0));
}
