#ifndef RECIP_MODMATH_HPP
#define RECIP_MODMATH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "recip/errors.hpp"

namespace recip {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(u64 n);

// Smallest prime >= n (n < 2^63 assumed so the result exists below 2^63).
u64 next_prime(u64 n);

/// An odd prime p, 3 <= p < 2^63.  All products go through 128-bit
/// intermediates so mulmod is exact for any residues.
class PrimeModulus {
public:
    explicit PrimeModulus(u64 p);

    u64 value() const { return p_; }

    u64 reduce(i64 x) const {
        i64 r = x % static_cast<i64>(p_);
        return r < 0 ? static_cast<u64>(r + static_cast<i64>(p_)) : static_cast<u64>(r);
    }
    u64 mul(u64 x, u64 y) const {
        return static_cast<u64>((static_cast<u128>(x) * y) % p_);
    }
    u64 add(u64 x, u64 y) const {
        u64 s = x + y;                    // x,y < p < 2^63: no wrap
        return s >= p_ ? s - p_ : s;
    }
    u64 sub(u64 x, u64 y) const { return x >= y ? x - y : x + p_ - y; }
    u64 neg(u64 x) const { return x == 0 ? 0 : p_ - x; }
    u64 pow(u64 base, u64 exp) const;

private:
    u64 p_;
};

/// Residue interval {a+1, ..., a+N} reduced mod p — the paper's I.
class Interval {
public:
    Interval(u64 offset, u64 length, const PrimeModulus& p);

    u64 offset() const { return a_; }
    u64 length() const { return n_; }

    // i-th member, 1 <= i <= N.
    u64 member(u64 i, const PrimeModulus& p) const {
        u64 m = a_ + i;
        return m >= p.value() ? m - p.value() : m;
    }
    bool contains(u64 x, const PrimeModulus& p) const;
    bool contains_zero(const PrimeModulus& p) const;

    std::vector<u64> members(const PrimeModulus& p) const;
    // Members inverted; throws DomainError if 0 is in the interval
    // or N > p-1 (members would repeat).
    std::vector<u64> inverse_members(const PrimeModulus& p) const;

private:
    u64 a_;  // offset in [0, p-1]
    u64 n_;  // length >= 1
};

/// Reduced fraction u/v with v > 0; the representation of section-9.3
/// rational reconstruction.
struct RationalPair {
    i64 u = 0;
    i64 v = 1;

    RationalPair() = default;
    RationalPair(i64 num, i64 den);  // gcd-reduces, makes den > 0
};

u64 mod_inverse(u64 x, const PrimeModulus& p);
std::vector<u64> batch_inverse(const std::vector<u64>& xs, const PrimeModulus& p);

// Represents residue j as u/v mod p with |u|, v <= floor(sqrt(p));
// minimal v, then minimal |u|, ties broken toward u >= 0.
RationalPair rational_reconstruct(u64 j, const PrimeModulus& p);

// tau(n), number of positive divisors (Pollard-rho factoring behind it).
u64 divisor_count(u64 n);

// Prime factorization as (prime, exponent) pairs, ascending primes.
std::vector<std::pair<u64, int>> factorize(u64 n);

std::vector<u64> primes_upto(u64 n);

// Psi(x, y): count of y-smooth integers in [1, x], by exact enumeration.
u64 smooth_count(u64 x, u64 y);

// pi(x; q, a): primes <= x congruent to a mod q.  Requires gcd(a, q) = 1.
u64 prime_count_ap(u64 x, u64 q, u64 a);

}  // namespace recip

#endif
