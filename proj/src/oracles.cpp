#include "recip/oracles.hpp"

#include <map>
#include <set>
#include <unordered_set>

namespace recip::oracles {

namespace {

// Recurse over `depth` more slots, each adding one inverse from `inv`.
template <typename Fn>
void each_sum(const std::vector<u64>& inv, int depth, u64 partial, const PrimeModulus& p,
              Fn&& fn) {
    if (depth == 0) {
        fn(partial);
        return;
    }
    for (u64 w : inv) each_sum(inv, depth - 1, p.add(partial, w), p, fn);
}

}  // namespace

mpz_class naive_count_J2k(const Interval& I, int k, const PrimeModulus& p) {
    auto inv = I.inverse_members(p);
    mpz_class count = 0;
    each_sum(inv, k, 0, p, [&](u64 lhs) {
        each_sum(inv, k, 0, p, [&](u64 rhs) {
            if (lhs == rhs) count += 1;
        });
    });
    return count;
}

u64 naive_ternary_count(const Interval& I, u64 lambda, const PrimeModulus& p) {
    auto inv = I.inverse_members(p);
    lambda %= p.value();
    u64 count = 0;
    for (u64 a : inv)
        for (u64 b : inv)
            for (u64 c : inv)
                if (p.add(p.add(a, b), c) == lambda) ++count;
    return count;
}

u64 naive_inverse_pair_count(const Interval& I, u64 lambda, const PrimeModulus& p) {
    auto inv = I.inverse_members(p);
    lambda %= p.value();
    u64 count = 0;
    for (u64 a : inv)
        for (u64 b : inv)
            if (p.add(a, b) == lambda) ++count;
    return count;
}

u64 naive_hyperbola_count(const Interval& I, u64 lambda, const PrimeModulus& p) {
    auto mem = I.members(p);
    lambda %= p.value();
    u64 count = 0;
    for (u64 x : mem)
        for (u64 y : mem)
            if (p.mul(x, y) == lambda) ++count;
    return count;
}

u64 naive_triple_product_count(const Interval& I, u64 lambda, const PrimeModulus& p) {
    auto mem = I.members(p);
    lambda %= p.value();
    u64 count = 0;
    for (u64 x : mem)
        for (u64 y : mem)
            for (u64 z : mem)
                if (p.mul(p.mul(x, y), z) == lambda) ++count;
    return count;
}

mpz_class naive_mult_energy(const Interval& I1, const Interval& I2, const PrimeModulus& p) {
    auto a = I1.members(p);
    auto b = I2.members(p);
    mpz_class count = 0;
    for (u64 x : a)
        for (u64 y : b)
            for (u64 z : a)
                for (u64 t : b)
                    if (p.mul(x, y) == p.mul(z, t)) count += 1;
    return count;
}

u64 naive_sumset_size(const Interval& I, int k, const PrimeModulus& p) {
    auto inv = I.inverse_members(p);
    std::unordered_set<u64> seen;
    each_sum(inv, k, 0, p, [&](u64 s) { seen.insert(s); });
    return seen.size();
}

namespace {

template <typename Fn>
void each_rat_sum(u64 N, int depth, const mpq_class& partial, Fn&& fn) {
    if (depth == 0) {
        fn(partial);
        return;
    }
    for (u64 x = 1; x <= N; ++x)
        each_rat_sum(N, depth - 1, partial + mpq_class(1, static_cast<unsigned long>(x)), fn);
}

}  // namespace

mpz_class naive_rational_J2k(u64 N, int k) {
    mpz_class count = 0;
    each_rat_sum(N, k, mpq_class(0), [&](const mpq_class& lhs) {
        each_rat_sum(N, k, mpq_class(0), [&](const mpq_class& rhs) {
            if (lhs == rhs) count += 1;
        });
    });
    return count;
}

RationalPair naive_rational_reconstruct(u64 j, const PrimeModulus& p) {
    u64 s = 0;
    while ((s + 1) * (s + 1) <= p.value()) ++s;
    j %= p.value();
    for (u64 v = 1; v <= s; ++v) {
        u64 jv = p.mul(j, v);
        // candidates for u with |u| <= s, preferring u >= 0 on ties
        if (jv <= s) return RationalPair(static_cast<i64>(jv), static_cast<i64>(v));
        if (p.value() - jv <= s)
            return RationalPair(-static_cast<i64>(p.value() - jv), static_cast<i64>(v));
    }
    throw std::logic_error("pigeonhole guarantees a representation");
}

u64 naive_smooth_count(u64 x, u64 y) {
    u64 count = 0;
    for (u64 n = 1; n <= x; ++n) {
        u64 m = n;
        for (u64 d = 2; d <= y && d * d <= m; ++d)
            while (m % d == 0) m /= d;
        if (m == 1 || m <= y) ++count;
    }
    return count;
}

u64 naive_divisor_count(u64 n) {
    u64 count = 0;
    for (u64 d = 1; d * d <= n; ++d)
        if (n % d == 0) count += (d * d == n) ? 1 : 2;
    return count;
}

mpz_class rational_symmetric_energy(const std::vector<mpq_class>& S, int s) {
    std::map<mpq_class, u64> sums{{mpq_class(0), 1}};
    for (int i = 0; i < s; ++i) {
        std::map<mpq_class, u64> next;
        for (const auto& [val, cnt] : sums)
            for (const auto& x : S) next[val + x] += cnt;
        sums = std::move(next);
    }
    mpz_class e = 0;
    for (const auto& [val, cnt] : sums) e += mpz_class(cnt) * mpz_class(cnt);
    return e;
}

}  // namespace recip::oracles
