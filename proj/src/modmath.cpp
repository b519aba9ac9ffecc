#include "recip/modmath.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace recip {

namespace {

u64 mulmod_u64(u64 x, u64 y, u64 m) {
    return static_cast<u64>((static_cast<u128>(x) * y) % m);
}

u64 powmod_u64(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This witness set is deterministic for all n < 3.3e24, covering 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

u64 next_prime(u64 n) {
    if (n <= 2) return 2;
    if ((n & 1) == 0) ++n;
    while (!is_prime_u64(n)) n += 2;
    return n;
}

PrimeModulus::PrimeModulus(u64 p) : p_(p) {
    if (p < 3 || p >= (1ull << 63))
        throw DomainError("modulus must satisfy 3 <= p < 2^63, got " + std::to_string(p));
    if (!is_prime_u64(p))
        throw DomainError("modulus " + std::to_string(p) + " is not prime");
}

u64 PrimeModulus::pow(u64 base, u64 exp) const { return powmod_u64(base % p_, exp, p_); }

Interval::Interval(u64 offset, u64 length, const PrimeModulus& p) : a_(offset), n_(length) {
    if (length == 0) throw DomainError("interval length must be >= 1");
    if (offset >= p.value()) throw DomainError("interval offset must lie in [0, p-1]");
}

bool Interval::contains(u64 x, const PrimeModulus& p) const {
    if (n_ >= p.value()) return true;
    // x = a + i mod p for some 1 <= i <= N?
    u64 i = p.sub(x % p.value(), a_);
    return i >= 1 && i <= n_;
}

bool Interval::contains_zero(const PrimeModulus& p) const {
    return contains(0, p);
}

std::vector<u64> Interval::members(const PrimeModulus& p) const {
    std::vector<u64> out;
    out.reserve(n_);
    for (u64 i = 1; i <= n_; ++i) out.push_back(member(i, p));
    return out;
}

std::vector<u64> Interval::inverse_members(const PrimeModulus& p) const {
    if (n_ > p.value() - 1)
        throw DomainError("interval longer than p-1 cannot be inverted elementwise");
    if (contains_zero(p))
        throw DomainError("interval contains 0 mod p; inverses are undefined");
    return batch_inverse(members(p), p);
}

RationalPair::RationalPair(i64 num, i64 den) : u(num), v(den) {
    if (den == 0) throw DomainError("rational denominator must be nonzero");
    if (v < 0) { u = -u; v = -v; }
    i64 g = std::gcd(u < 0 ? -u : u, v);
    if (g > 1) { u /= g; v /= g; }
    if (u == 0) v = 1;
}

u64 mod_inverse(u64 x, const PrimeModulus& p) {
    x %= p.value();
    if (x == 0) throw DomainError("zero has no inverse");
    // Extended Euclid on (p, x); p prime so gcd is 1.
    i64 a = static_cast<i64>(p.value()), b = static_cast<i64>(x);
    i64 t0 = 0, t1 = 1;
    while (b != 0) {
        i64 q = a / b;
        i64 r = a - q * b;
        a = b; b = r;
        i64 t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    return p.reduce(t0);
}

std::vector<u64> batch_inverse(const std::vector<u64>& xs, const PrimeModulus& p) {
    const size_t n = xs.size();
    if (n == 0) return {};
    std::vector<u64> prefix(n);
    u64 acc = 1;
    for (size_t i = 0; i < n; ++i) {
        u64 x = xs[i] % p.value();
        if (x == 0)
            throw DomainError("batch_inverse: entry " + std::to_string(i) + " is zero mod p");
        acc = p.mul(acc, x);
        prefix[i] = acc;
    }
    u64 inv = mod_inverse(acc, p);
    std::vector<u64> out(n);
    for (size_t i = n; i-- > 1;) {
        out[i] = p.mul(inv, prefix[i - 1]);
        inv = p.mul(inv, xs[i] % p.value());
    }
    out[0] = inv;
    return out;
}

RationalPair rational_reconstruct(u64 j, const PrimeModulus& p) {
    j %= p.value();
    if (j == 0) return RationalPair(0, 1);
    const u64 s = [&] {
        u64 r = static_cast<u64>(std::sqrt(static_cast<double>(p.value())));
        while (r * r > p.value()) --r;
        while ((r + 1) * (r + 1) <= p.value()) ++r;
        return r;                           // floor(sqrt(p))
    }();
    // Remainder sequence r_i with r_i = t_i * j (mod p).  The |t_i| are the
    // continued-fraction denominators of j/p, so the first remainder <= s
    // yields the minimal admissible v by the best-approximation law.
    i64 r0 = static_cast<i64>(p.value()), r1 = static_cast<i64>(j);
    i64 t0 = 0, t1 = 1;
    while (static_cast<u64>(r1) > s) {
        i64 q = r0 / r1;
        i64 r2 = r0 - q * r1;
        i64 t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    i64 u = r1, v = t1;
    if (v < 0) { u = -u; v = -v; }
    return RationalPair(u, v);
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
    if (n == 0) throw DomainError("cannot factorize 0");
    std::vector<u64> primes;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        while (n % q == 0) { primes.push_back(q); n /= q; }
    }
    // Pollard rho (Brent) on what remains.
    std::vector<u64> stack;
    if (n > 1) stack.push_back(n);
    while (!stack.empty()) {
        u64 m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_prime_u64(m)) { primes.push_back(m); continue; }
        u64 d = m;
        for (u64 c = 1; d == m; ++c) {
            u64 x = 2, y = 2;
            d = 1;
            while (d == 1) {
                x = (mulmod_u64(x, x, m) + c) % m;
                y = (mulmod_u64(y, y, m) + c) % m;
                y = (mulmod_u64(y, y, m) + c) % m;
                d = std::gcd(x > y ? x - y : y - x, m);
            }
        }
        stack.push_back(d);
        stack.push_back(m / d);
    }
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<u64, int>> out;
    for (u64 q : primes) {
        if (!out.empty() && out.back().first == q)
            ++out.back().second;
        else
            out.push_back({q, 1});
    }
    return out;
}

u64 divisor_count(u64 n) {
    if (n == 0) throw DomainError("divisor_count(0) is undefined");
    if (n == 1) return 1;
    u64 tau = 1;
    for (auto [q, e] : factorize(n)) tau *= static_cast<u64>(e + 1);
    return tau;
}

std::vector<u64> primes_upto(u64 n) {
    std::vector<u64> out;
    if (n < 2) return out;
    std::vector<bool> comp(n + 1, false);
    for (u64 i = 2; i * i <= n; ++i)
        if (!comp[i])
            for (u64 j = i * i; j <= n; j += i) comp[j] = true;
    for (u64 i = 2; i <= n; ++i)
        if (!comp[i]) out.push_back(i);
    return out;
}

namespace {

u64 smooth_rec(u64 x, const std::vector<u64>& primes, size_t i) {
    // Count integers in [1, x] whose prime factors all come from primes[i..],
    // splitting on the smallest prime factor.
    u64 total = 1;  // the integer 1
    for (size_t k = i; k < primes.size() && primes[k] <= x; ++k)
        total += smooth_rec(x / primes[k], primes, k);
    return total;
}

}  // namespace

u64 smooth_count(u64 x, u64 y) {
    if (x == 0 || y == 0) throw DomainError("smooth_count requires x >= 1, y >= 1");
    auto primes = primes_upto(std::min(x, y));
    return smooth_rec(x, primes, 0);
}

u64 prime_count_ap(u64 x, u64 q, u64 a) {
    if (q == 0) throw DomainError("prime_count_ap: modulus q must be >= 1");
    if (std::gcd(a % q, q) != 1)
        throw DomainError("prime_count_ap requires gcd(a, q) = 1");
    u64 count = 0;
    for (u64 p : primes_upto(x))
        if (p % q == a % q) ++count;
    return count;
}

}  // namespace recip
