#include "recip/counting.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <unordered_set>

namespace recip {

namespace {

constexpr u64 kSparseEntryBudget = 1ull << 27;

// N^k if it fits below 2^63, otherwise 0 (counts would overflow u64).
u64 checked_pow(u64 n, int k) {
    u128 r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n;
        if (r >= (u128(1) << 63)) return 0;
    }
    return static_cast<u64>(r);
}

void run_chunked(u64 total, int threads, const std::function<void(u64, u64)>& body) {
    if (threads <= 1 || total < 1024) {
        body(0, total);
        return;
    }
    std::vector<std::thread> pool;
    u64 chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        u64 lo = std::min<u64>(total, t * chunk);
        u64 hi = std::min<u64>(total, lo + chunk);
        if (lo < hi) pool.emplace_back(body, lo, hi);
    }
    for (auto& th : pool) th.join();
}

// One convolution step of a dense count vector with a base set.
// out[r] = sum over w in base of cur[r - w]; data-parallel over r.
std::vector<u64> dense_step(const std::vector<u64>& cur, const std::vector<u64>& base,
                            const PrimeModulus& p, int threads) {
    std::vector<u64> next(cur.size(), 0);
    run_chunked(cur.size(), threads, [&](u64 lo, u64 hi) {
        for (u64 r = lo; r < hi; ++r) {
            u64 acc = 0;
            for (u64 w : base) acc += cur[p.sub(r, w)];
            next[r] = acc;
        }
    });
    return next;
}

using SparseMap = std::unordered_map<u64, u64>;

SparseMap sparse_convolve(const SparseMap& a, const SparseMap& b, const PrimeModulus& p) {
    SparseMap out;
    out.reserve(std::min<size_t>(a.size() * b.size(), kSparseEntryBudget));
    for (const auto& [ra, ca] : a)
        for (const auto& [rb, cb] : b) out[p.add(ra, rb)] += ca * cb;
    if (out.size() > kSparseEntryBudget)
        throw ResourceError("sparse distribution exceeds the entry budget");
    return out;
}

ResidueDistribution from_sparse_map(SparseMap&& m, const PrimeModulus& p, Backend backend) {
    ResidueDistribution d(p, backend);
    for (const auto& [r, c] : m) d.add(r, c);
    return d;
}

// k-fold sums from one base set, meet-in-the-middle over k = half + rest.
ResidueDistribution sparse_self_sums(const std::vector<u64>& base, int k, const PrimeModulus& p) {
    SparseMap one;
    for (u64 w : base) one[w] += 1;
    if (k == 1) return from_sparse_map(std::move(one), p, Backend::Sparse);
    int half = k / 2;
    SparseMap left = one;
    for (int i = 1; i < half; ++i) left = sparse_convolve(left, one, p);
    SparseMap right = one;
    for (int i = 1; i < k - half; ++i) right = sparse_convolve(right, one, p);
    return from_sparse_map(sparse_convolve(left, right, p), p, Backend::Sparse);
}

ResidueDistribution base_sums(const std::vector<u64>& base, int k, const PrimeModulus& p,
                              Backend backend, int threads) {
    if (k < 1) throw DomainError("fold count k must be >= 1");
    u64 mass = checked_pow(base.size(), k);
    if (mass == 0)
        throw ResourceError("N^k exceeds 2^63; counts would overflow");
    bool dense_ok = p.value() <= ResidueDistribution::kDenseLimit;
    if (backend == Backend::Auto) {
        double dense_work = dense_ok ? double(k - 1) * double(p.value()) * double(base.size()) +
                                           double(p.value())
                                     : 1e300;
        double sparse_work = std::pow(double(base.size()), k);
        backend = (dense_ok && dense_work <= sparse_work) ? Backend::Dense : Backend::Sparse;
    }
    if (backend == Backend::Dense) {
        ResidueDistribution d(p, Backend::Dense);  // throws ResourceError when p too large
        std::vector<u64> cur(p.value(), 0);
        for (u64 w : base) cur[w] += 1;
        for (int i = 1; i < k; ++i) cur = dense_step(cur, base, p, threads);
        for (u64 r = 0; r < p.value(); ++r)
            if (cur[r]) d.add(r, cur[r]);
        return d;
    }
    return sparse_self_sums(base, k, p);
}

}  // namespace

double log_mpz(const mpz_class& z) {
    signed long e = 0;
    double m = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log(m) + double(e) * std::log(2.0);
}

double exponent_of(const mpz_class& J, u64 N) {
    if (J < 1 || N < 2) return 0.0;
    return log_mpz(J) / std::log(double(N));
}

ResidueDistribution inverse_sum_distribution(const Interval& I, int k, const PrimeModulus& p,
                                             Backend backend, int threads) {
    return base_sums(I.inverse_members(p), k, p, backend, threads);
}

ResidueDistribution sum_distribution(const std::vector<std::vector<u64>>& bases,
                                     const PrimeModulus& p, Backend backend, int threads) {
    if (bases.empty()) throw DomainError("sum_distribution needs at least one base set");
    u128 mass = 1;
    for (const auto& b : bases) {
        mass *= b.size();
        if (mass >= (u128(1) << 63)) throw ResourceError("product of base sizes overflows");
    }
    bool dense_ok = p.value() <= ResidueDistribution::kDenseLimit;
    if (backend == Backend::Auto) backend = dense_ok ? Backend::Dense : Backend::Sparse;
    if (backend == Backend::Dense) {
        ResidueDistribution d(p, Backend::Dense);
        std::vector<u64> cur(p.value(), 0);
        for (u64 w : bases[0]) cur[w] += 1;
        for (size_t i = 1; i < bases.size(); ++i) cur = dense_step(cur, bases[i], p, threads);
        for (u64 r = 0; r < p.value(); ++r)
            if (cur[r]) d.add(r, cur[r]);
        return d;
    }
    SparseMap acc;
    for (u64 w : bases[0]) acc[w] += 1;
    for (size_t i = 1; i < bases.size(); ++i) {
        SparseMap next;
        for (u64 w : bases[i]) next[w] += 1;
        acc = sparse_convolve(acc, next, p);
    }
    return from_sparse_map(std::move(acc), p, Backend::Sparse);
}

namespace {

CountReport energy_report(const ResidueDistribution& dist, u64 N, int k, const PrimeModulus& p,
                          mpq_class predicted, double seconds) {
    CountReport r;
    r.J = dist.energy();
    r.N = N;
    r.k = k;
    r.p = p.value();
    r.predicted_exponent = std::move(predicted);
    r.measured_exponent = exponent_of(r.J, N);
    r.wall_time = seconds;
    return r;
}

}  // namespace

CountReport count_J2k(const Interval& I, int k, const PrimeModulus& p, Backend backend,
                      int threads) {
    auto t0 = std::chrono::steady_clock::now();
    auto dist = inverse_sum_distribution(I, k, p, backend, threads);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    mpq_class predicted(2 * k * k, k + 1);
    predicted.canonicalize();
    return energy_report(dist, I.length(), k, p, predicted, secs);
}

CountReport count_J2k_prime(u64 N, int k, const PrimeModulus& p, Backend backend) {
    if (N >= p.value()) throw DomainError("count_J2k_prime requires N < p");
    auto t0 = std::chrono::steady_clock::now();
    auto primes = primes_upto(N);
    CountReport r;
    if (primes.empty()) {
        r.J = 0;
        r.N = N;
        r.k = k;
        r.p = p.value();
        r.predicted_exponent = k;
        return r;
    }
    auto dist = base_sums(batch_inverse(primes, p), k, p, backend, 1);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return energy_report(dist, N, k, p, mpq_class(k), secs);
}

TernaryCount ternary_count(const Interval& I, u64 lambda, const PrimeModulus& p) {
    auto inv = I.inverse_members(p);
    std::unordered_set<u64> inv_set(inv.begin(), inv.end());
    lambda %= p.value();
    TernaryCount out;
    out.lambda_excluded = lambda == 0 || inv_set.count(lambda) > 0;
    for (u64 a : inv)
        for (u64 b : inv) {
            u64 need = p.sub(lambda, p.add(a, b));
            if (inv_set.count(need)) ++out.count;
        }
    return out;
}

u64 sumset_size(const Interval& I, int k, const PrimeModulus& p, Backend backend) {
    return inverse_sum_distribution(I, k, p, backend).support_size();
}

u64 hyperbola_count(const Interval& I, u64 lambda, const PrimeModulus& p) {
    lambda %= p.value();
    if (lambda == 0) throw DomainError("hyperbola_count requires lambda nonzero mod p");
    u64 count = 0;
    for (u64 x : I.members(p)) {
        if (x == 0) continue;  // xy = lambda != 0 forces x != 0
        u64 y = p.mul(lambda, mod_inverse(x, p));
        if (I.contains(y, p)) ++count;
    }
    return count;
}

u64 inverse_pair_count(const Interval& I, u64 lambda, const PrimeModulus& p) {
    lambda %= p.value();
    if (lambda == 0) throw DomainError("inverse_pair_count requires lambda nonzero mod p");
    u64 li = mod_inverse(lambda, p);
    u64 li2 = p.mul(li, li);
    u64 count = 0;
    for (u64 x : I.members(p)) {
        if (x == 0)
            throw DomainError("interval contains 0 mod p; inverses are undefined");
        u64 t = p.sub(x, li);
        if (t == 0) continue;  // (x - l^-1)(y - l^-1) = l^-2 != 0
        u64 y = p.add(li, p.mul(li2, mod_inverse(t, p)));
        if (I.contains(y, p)) ++count;
    }
    return count;
}

u64 triple_product_count(const Interval& I, u64 lambda, const PrimeModulus& p) {
    lambda %= p.value();
    if (lambda == 0) throw DomainError("triple_product_count requires lambda nonzero mod p");
    auto inv = I.inverse_members(p);
    u64 count = 0;
    for (u64 xi : inv)
        for (u64 yi : inv) {
            u64 z = p.mul(lambda, p.mul(xi, yi));
            if (I.contains(z, p)) ++count;
        }
    return count;
}

mpz_class mult_energy(const Interval& I1, const Interval& I2, const PrimeModulus& p) {
    auto a = I1.members(p);
    auto b = I2.members(p);
    for (u64 x : a)
        if (x == 0) throw DomainError("mult_energy: interval contains 0 mod p");
    for (u64 y : b)
        if (y == 0) throw DomainError("mult_energy: interval contains 0 mod p");
    SparseMap products;
    products.reserve(a.size() * b.size());
    for (u64 x : a)
        for (u64 y : b) products[p.mul(x, y)] += 1;
    u128 e = 0;
    for (const auto& [r, c] : products) e += static_cast<u128>(c) * c;
    return u128_to_mpz(e);
}

namespace {

using RatMap = std::map<mpq_class, u64>;

RatMap rat_convolve(const RatMap& a, const RatMap& b) {
    RatMap out;
    for (const auto& [ra, ca] : a)
        for (const auto& [rb, cb] : b) out[ra + rb] += ca * cb;
    return out;
}

mpz_class rat_energy(const RatMap& m) {
    mpz_class e = 0;
    for (const auto& [r, c] : m) e += mpz_class(c) * mpz_class(c);
    return e;
}

RatMap fold_sums(const RatMap& base, int r) {
    int half = r / 2;
    RatMap acc = base;
    for (int i = 1; i < half; ++i) acc = rat_convolve(acc, base);
    RatMap rest = base;
    for (int i = 1; i < r - half; ++i) rest = rat_convolve(rest, base);
    if (half == 0) return rest;
    return rat_convolve(acc, rest);
}

}  // namespace

mpz_class rational_J2k(u64 N, int k) {
    if (N < 1 || k < 1) throw DomainError("rational_J2k requires N >= 1, k >= 1");
    RatMap base;
    for (u64 x = 1; x <= N; ++x) base[mpq_class(1, static_cast<unsigned long>(x))] += 1;
    return rat_energy(fold_sums(base, k));
}

mpz_class rational_shifted_count(const RationalPair& sigma, u64 N, int r) {
    if (r < 1) throw DomainError("rational_shifted_count requires r >= 1");
    mpq_class s(sigma.u, sigma.v);
    s.canonicalize();
    RatMap base;
    for (u64 x = 1; x <= N; ++x) {
        mpq_class d = s + mpq_class(static_cast<unsigned long>(x));
        if (d == 0)
            throw DomainError("sigma + x vanishes at x = " + std::to_string(x));
        base[1 / d] += 1;
    }
    return rat_energy(fold_sums(base, r));
}

mpz_class weighted_solution_count(const std::vector<mpq_class>& coeffs, const mpq_class& c,
                                  const std::vector<mpq_class>& S) {
    if (coeffs.empty()) throw DomainError("weighted_solution_count: empty coefficient list");
    for (const auto& ci : coeffs)
        if (ci == 0) throw DomainError("weighted_solution_count: zero coefficient");
    size_t r = coeffs.size();
    size_t half = r / 2;
    auto partial = [&](size_t lo, size_t hi) {
        RatMap m{{mpq_class(0), 1}};
        for (size_t i = lo; i < hi; ++i) {
            RatMap next;
            for (const auto& [val, cnt] : m)
                for (const auto& x : S) next[val + coeffs[i] * x] += cnt;
            m = std::move(next);
        }
        return m;
    };
    RatMap left = partial(0, half);
    RatMap right = partial(half, r);
    mpz_class total = 0;
    for (const auto& [val, cnt] : left) {
        auto it = right.find(c - val);
        if (it != right.end()) total += mpz_class(cnt) * mpz_class(it->second);
    }
    return total;
}

mpz_class dioph_3I_count(i64 a0, i64 b0, i64 u0, i64 v0, u64 N) {
    if (b0 == 0 || u0 == 0 || v0 == 0)
        throw DomainError("dioph_3I_count requires b0, u0, v0 nonzero");
    // Hypothesis: u0/v0 must avoid { b0/(a0 + b0 x) : 1 <= x <= N }.
    // u0 (a0 + b0 x) = v0 b0 has at most one integer solution x.
    {
        i128 num = i128(v0) * b0 - i128(u0) * a0;
        i128 den = i128(u0) * b0;
        if (num % den == 0) {
            i128 x = num / den;
            if (x >= 1 && x <= i128(N))
                throw HypothesisError("u0/v0 equals b0/(a0+b0*x) at x = " +
                                      std::to_string(static_cast<long long>(x)));
        }
    }
    mpq_class target(mpz_class(u0), mpz_class(v0) * mpz_class(b0));
    target.canonicalize();
    std::vector<mpq_class> recip(N + 1);
    std::vector<bool> valid(N + 1, false);
    for (u64 x = 1; x <= N; ++x) {
        mpz_class X = mpz_class(a0) + mpz_class(b0) * static_cast<long>(x);
        if (X == 0) continue;
        recip[x] = mpq_class(1) / mpq_class(X);
        valid[x] = true;
    }
    mpz_class count = 0;
    for (u64 x1 = 1; x1 <= N; ++x1) {
        if (!valid[x1]) continue;
        for (u64 x2 = 1; x2 <= N; ++x2) {
            if (!valid[x2]) continue;
            mpq_class rem = target - recip[x1] - recip[x2];
            if (rem == 0) continue;
            // rem must be 1/X3 with X3 = a0 + b0 x3, x3 in [1, N]
            if (rem.get_num() != 1 && rem.get_num() != -1) continue;
            mpz_class X3 = rem.get_num() == 1 ? rem.get_den() : mpz_class(-rem.get_den());
            mpz_class num = X3 - a0;
            if (num % b0 != 0) continue;
            mpz_class x3 = num / b0;
            if (x3 >= 1 && x3 <= mpz_class(static_cast<unsigned long>(N))) count += 1;
        }
    }
    return count;
}

}  // namespace recip
