#include <random>

#include "doctest.h"
#include "recip/modmath.hpp"
#include "recip/oracles.hpp"

using namespace recip;

TEST_CASE("prime modulus construction") {
    CHECK_NOTHROW(PrimeModulus(3));
    CHECK_NOTHROW(PrimeModulus(101));
    CHECK_NOTHROW(PrimeModulus(2305843009213693951ull));  // 2^61 - 1
    CHECK_THROWS_AS(PrimeModulus(1), DomainError);
    CHECK_THROWS_AS(PrimeModulus(2), DomainError);
    CHECK_THROWS_AS(PrimeModulus(91), DomainError);  // 7 * 13
    CHECK_THROWS_AS(PrimeModulus(1ull << 63), DomainError);
}

TEST_CASE("deterministic primality") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(1000003));
    CHECK(is_prime_u64(1048573));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to 2,3,5,7
    CHECK(next_prime(2000000000000000000ull) >= 2000000000000000000ull);
    CHECK(is_prime_u64(next_prime(2000000000000000000ull)));
}

TEST_CASE("mulmod is exact near the 63-bit cap") {
    PrimeModulus p(9223372036854775783ull);  // largest prime < 2^63
    u64 x = p.value() - 1;
    CHECK(p.mul(x, x) == 1);  // (-1)^2
    CHECK(p.mul(x, 2) == p.value() - 2);
}

TEST_CASE("mod_inverse examples") {
    PrimeModulus p7(7), p13(13);
    CHECK(mod_inverse(1, p7) == 1);
    CHECK(mod_inverse(3, p7) == 5);
    CHECK(mod_inverse(4, p13) == 10);
    CHECK_THROWS_AS(mod_inverse(0, p7), DomainError);
    CHECK_THROWS_AS(mod_inverse(7, p7), DomainError);
}

TEST_CASE("inverse is an involution and multiplies to one") {
    PrimeModulus p(10007);
    for (u64 x = 1; x < 10007; ++x) {
        u64 y = mod_inverse(x, p);
        CHECK(p.mul(x, y) == 1);
        CHECK(mod_inverse(y, p) == x);
    }
}

TEST_CASE("batch inverse examples and random agreement") {
    PrimeModulus p7(7);
    CHECK(batch_inverse({1, 2, 3}, p7) == std::vector<u64>{1, 4, 5});
    CHECK(batch_inverse({1}, p7) == std::vector<u64>{1});
    CHECK(batch_inverse({6, 6}, p7) == std::vector<u64>{6, 6});
    CHECK(batch_inverse({}, p7).empty());
    CHECK_THROWS_WITH_AS(batch_inverse({1, 0, 3}, p7), doctest::Contains("entry 1"), DomainError);

    PrimeModulus p(1000003);
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<u64> d(1, p.value() - 1);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<u64> xs(1 + rng() % 100);
        for (auto& x : xs) x = d(rng);
        auto got = batch_inverse(xs, p);
        for (size_t i = 0; i < xs.size(); ++i) CHECK(got[i] == mod_inverse(xs[i], p));
    }
}

TEST_CASE("rational reconstruction examples") {
    PrimeModulus p7(7);
    auto r0 = rational_reconstruct(0, p7);
    CHECK(r0.u == 0);
    CHECK(r0.v == 1);
    auto r1 = rational_reconstruct(1, p7);
    CHECK(r1.u == 1);
    CHECK(r1.v == 1);
    auto r3 = rational_reconstruct(3, p7);
    CHECK(r3.u == -1);
    CHECK(r3.v == 2);
}

TEST_CASE("rational reconstruction is canonical for every j, p <= 101") {
    for (u64 pv : primes_upto(101)) {
        if (pv < 3) continue;
        PrimeModulus p(pv);
        u64 s = 1;
        while ((s + 1) * (s + 1) <= pv) ++s;
        for (u64 j = 0; j < pv; ++j) {
            auto got = rational_reconstruct(j, p);
            auto want = oracles::naive_rational_reconstruct(j, p);
            CAPTURE(pv);
            CAPTURE(j);
            CHECK(got.u == want.u);
            CHECK(got.v == want.v);
            CHECK(got.v >= 1);
            CHECK(static_cast<u64>(got.v) <= s);
            CHECK(static_cast<u64>(got.u < 0 ? -got.u : got.u) <= s);
            CHECK(p.reduce(got.u) == p.mul(j % pv, static_cast<u64>(got.v)));
        }
    }
}

TEST_CASE("rational reconstruction at a large prime") {
    PrimeModulus p(1000003);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<u64> d(0, p.value() - 1);
    u64 s = 1000;  // floor(sqrt(1000003))
    for (int trial = 0; trial < 2000; ++trial) {
        u64 j = d(rng);
        auto rp = rational_reconstruct(j, p);
        CHECK(rp.v >= 1);
        CHECK(static_cast<u64>(rp.v) <= s);
        CHECK(static_cast<u64>(rp.u < 0 ? -rp.u : rp.u) <= s);
        CHECK(p.reduce(rp.u) == p.mul(j, static_cast<u64>(rp.v)));
    }
}

TEST_CASE("divisor count") {
    CHECK(divisor_count(1) == 1);
    CHECK(divisor_count(12) == 6);
    CHECK(divisor_count(36) == 9);
    CHECK(divisor_count(9223372036854775783ull) == 2);  // large prime
    CHECK_THROWS_AS(divisor_count(0), DomainError);
    for (u64 n = 1; n <= 500; ++n) CHECK(divisor_count(n) == oracles::naive_divisor_count(n));
}

TEST_CASE("primes_upto") {
    CHECK(primes_upto(1).empty());
    CHECK(primes_upto(10) == std::vector<u64>{2, 3, 5, 7});
    CHECK(primes_upto(30).size() == 10);
    CHECK(primes_upto(0).empty());
}

TEST_CASE("smooth count") {
    CHECK(smooth_count(10, 10) == 10);
    CHECK(smooth_count(10, 2) == 4);
    CHECK(smooth_count(100, 3) == 20);
    CHECK(smooth_count(50, 1) == 1);
    CHECK_THROWS_AS(smooth_count(0, 3), DomainError);
    for (u64 x : {20ull, 100ull, 257ull})
        for (u64 y : {1ull, 2ull, 5ull, 13ull, 400ull})
            CHECK(smooth_count(x, y) == oracles::naive_smooth_count(x, y));
}

TEST_CASE("smooth count is monotone in both arguments") {
    for (u64 x = 1; x <= 60; ++x)
        for (u64 y = 1; y <= 20; ++y) {
            CHECK(smooth_count(x + 1, y) >= smooth_count(x, y));
            CHECK(smooth_count(x, y + 1) >= smooth_count(x, y));
        }
}

TEST_CASE("prime counting in progressions") {
    CHECK(prime_count_ap(10, 1, 0) == 4);
    CHECK(prime_count_ap(20, 4, 1) == 3);
    CHECK(prime_count_ap(20, 4, 3) == 4);
    CHECK(prime_count_ap(100, 11, 1) == 3);  // 23, 67, 89
    CHECK_THROWS_AS(prime_count_ap(100, 4, 2), DomainError);
}

TEST_CASE("progression counts sum to pi(x) minus primes dividing q") {
    for (u64 q : {3ull, 4ull, 6ull, 10ull, 15ull}) {
        u64 x = 2000;
        u64 total = 0;
        for (u64 a = 1; a < q; ++a)
            if (std::gcd(a, q) == 1) total += prime_count_ap(x, q, a);
        u64 dividing = 0;
        for (auto [p, e] : factorize(q))
            if (p <= x) ++dividing;
        CHECK(total == primes_upto(x).size() - dividing);
    }
}

TEST_CASE("interval membership and inverses") {
    PrimeModulus p(7);
    Interval I(0, 3, p);  // {1,2,3}
    CHECK(I.contains(1, p));
    CHECK(I.contains(3, p));
    CHECK_FALSE(I.contains(0, p));
    CHECK_FALSE(I.contains(4, p));
    CHECK(I.inverse_members(p) == std::vector<u64>{1, 4, 5});

    Interval wrap(5, 3, p);  // {6, 0, 1}
    CHECK(wrap.contains(0, p));
    CHECK(wrap.contains_zero(p));
    CHECK_THROWS_AS(wrap.inverse_members(p), DomainError);

    Interval full(0, 6, p);
    CHECK_FALSE(full.contains_zero(p));
    auto inv = full.inverse_members(p);
    CHECK(inv.size() == 6);
}

TEST_CASE("rational pair canonicalization") {
    RationalPair r(2, -4);
    CHECK(r.u == -1);
    CHECK(r.v == 2);
    RationalPair z(0, -5);
    CHECK(z.u == 0);
    CHECK(z.v == 1);
    CHECK_THROWS_AS(RationalPair(1, 0), DomainError);
}
