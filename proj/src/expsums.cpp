#include "recip/expsums.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace recip {

namespace {

// Kahan-compensated accumulator, one per component.
struct Kahan {
    double sum = 0.0, comp = 0.0;
    void add(double x) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

struct ComplexKahan {
    Kahan re, im;
    u64 terms = 0;
    void add(std::complex<double> z) {
        re.add(z.real());
        im.add(z.imag());
        ++terms;
    }
    ComplexSum result() const { return {re.sum, im.sum, terms}; }
};

}  // namespace

std::complex<double> unit_root(u64 z, u64 p) {
    double angle = 2.0 * std::numbers::pi * (double(z) / double(p));
    return {std::cos(angle), std::sin(angle)};
}

CoeffSeq::CoeffSeq(std::vector<std::complex<double>> values) : values_(std::move(values)) {
    for (const auto& v : values_)
        if (std::abs(v) > 1.0 + 1e-12)
            throw DomainError("coefficient exceeds the unit sup-norm");
}

CoeffSeq CoeffSeq::ones(u64 n) {
    return CoeffSeq(std::vector<std::complex<double>>(n, {1.0, 0.0}));
}

ComplexSum linear_incomplete(u64 a, const Interval& I, const PrimeModulus& p) {
    auto inv = I.inverse_members(p);
    a %= p.value();
    ComplexKahan acc;
    for (u64 w : inv) acc.add(unit_root(p.mul(a, w), p.value()));
    return acc.result();
}

MaxScanResult max_linear_over_a(const Interval& I, const PrimeModulus& p) {
    if (p.value() > (1ull << 24))
        throw ResourceError("dense DFT scan needs p <= 2^24; use max_linear_sampled");
    auto inv = I.inverse_members(p);
    const size_t n = p.value();
    fftw_complex* buf = fftw_alloc_complex(n);
    for (size_t i = 0; i < n; ++i) buf[i][0] = buf[i][1] = 0.0;
    for (u64 w : inv) buf[w][0] = 1.0;
    // Backward transform: out[a] = sum_x buf[x] e^{+2 pi i a x / p}, which is
    // exactly the incomplete sum at coefficient a.
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
    MaxScanResult best;
    const double tie_eps = 1e-12 * double(I.length());
    for (u64 a = 1; a < n; ++a) {
        double mag = std::hypot(buf[a][0], buf[a][1]);
        if (mag > best.magnitude + tie_eps) {
            best.magnitude = mag;
            best.a_star = a;
        }
    }
    fftw_free(buf);
    return best;
}

MaxScanResult max_linear_sampled(const Interval& I, const PrimeModulus& p, u64 samples, u64 seed) {
    if (samples == 0) throw DomainError("sample count must be >= 1");
    samples = std::min(samples, p.value() - 1);
    std::mt19937_64 rng(seed);
    MaxScanResult best;
    // Stratified: one draw from each of `samples` equal slices of [1, p-1].
    u64 span = (p.value() - 1) / samples;
    for (u64 s = 0; s < samples; ++s) {
        u64 lo = 1 + s * span;
        u64 hi = s + 1 == samples ? p.value() - 1 : lo + span - 1;
        std::uniform_int_distribution<u64> pick(lo, hi);
        u64 a = pick(rng);
        double mag = linear_incomplete(a, I, p).modulus();
        if (mag > best.magnitude) {
            best.magnitude = mag;
            best.a_star = a;
        }
    }
    return best;
}

ComplexSum bilinear(u64 a, const Interval& I1, const Interval& I2, const CoeffSeq& alpha1,
                    const CoeffSeq& alpha2, const PrimeModulus& p) {
    if (alpha1.size() != I1.length() || alpha2.size() != I2.length())
        throw DomainError("coefficient sequence length does not match its interval");
    auto inv1 = I1.inverse_members(p);
    auto inv2 = I2.inverse_members(p);
    a %= p.value();
    ComplexKahan acc;
    for (size_t i = 0; i < inv1.size(); ++i) {
        u64 w = p.mul(a, inv1[i]);
        for (size_t j = 0; j < inv2.size(); ++j)
            acc.add(alpha1[i] * alpha2[j] * unit_root(p.mul(w, inv2[j]), p.value()));
    }
    return acc.result();
}

ComplexSum multilinear(u64 a, const std::vector<Interval>& intervals,
                       const std::vector<CoeffSeq>& coeffs, const PrimeModulus& p,
                       u64 term_budget) {
    const size_t n = intervals.size();
    if (n == 0) throw DomainError("multilinear needs at least one interval");
    if (coeffs.size() != n) throw DomainError("need one coefficient sequence per interval");
    for (size_t i = 0; i < n; ++i)
        if (coeffs[i].size() != intervals[i].length())
            throw DomainError("coefficient sequence length does not match its interval");
    a %= p.value();

    double direct_terms = 1.0;
    u64 total_len = 0;
    for (const auto& I : intervals) {
        direct_terms *= double(I.length());
        total_len += I.length();
    }

    std::vector<std::vector<u64>> inv(n);
    for (size_t i = 0; i < n; ++i) inv[i] = intervals[i].inverse_members(p);

    // Dense path: carry the distribution of partial inverse products as a
    // complex vector over residues (cost ~ p per factor instead of prod N_i).
    double dense_cost = double(p.value()) * double(total_len);
    if (n > 2 && p.value() <= (1ull << 22) && dense_cost < direct_terms) {
        std::vector<std::complex<double>> cur(p.value(), {0.0, 0.0});
        for (size_t j = 0; j < inv[0].size(); ++j) cur[inv[0][j]] += coeffs[0][j];
        for (size_t i = 1; i < n; ++i) {
            std::vector<std::complex<double>> next(p.value(), {0.0, 0.0});
            for (u64 r = 0; r < p.value(); ++r) {
                if (cur[r] == std::complex<double>(0.0, 0.0)) continue;
                for (size_t j = 0; j < inv[i].size(); ++j)
                    next[p.mul(r, inv[i][j])] += cur[r] * coeffs[i][j];
            }
            cur = std::move(next);
        }
        ComplexKahan acc;
        u128 terms = 1;
        for (const auto& I : intervals) terms *= I.length();
        for (u64 r = 0; r < p.value(); ++r) {
            if (cur[r] == std::complex<double>(0.0, 0.0)) continue;
            acc.add(cur[r] * unit_root(p.mul(a, r), p.value()));
        }
        ComplexSum out = acc.result();
        u128 cap = (u128(1) << 64) - 1;
        out.terms = static_cast<u64>(terms > cap ? cap : terms);
        return out;
    }

    if (direct_terms > double(term_budget))
        throw ResourceError("multilinear: " + std::to_string(direct_terms) +
                            " terms exceed the budget; raise it or use a dense modulus");

    // Direct nested enumeration with running partial products.
    ComplexKahan acc;
    auto rec = [&](auto&& self, size_t depth, u64 prod, std::complex<double> weight) -> void {
        if (depth == n) {
            acc.add(weight * unit_root(p.mul(a, prod), p.value()));
            return;
        }
        for (size_t j = 0; j < inv[depth].size(); ++j)
            self(self, depth + 1, p.mul(prod, inv[depth][j]), weight * coeffs[depth][j]);
    };
    rec(rec, 0, 1, {1.0, 0.0});
    return acc.result();
}

ComplexSum prime_sum_power_r(u64 a, u64 N, int r, const PrimeModulus& p) {
    if (r < 1) throw DomainError("prime_sum_power_r requires r >= 1");
    if (N >= p.value()) throw DomainError("prime_sum_power_r requires N < p");
    a %= p.value();
    auto primes = primes_upto(N);
    std::vector<u64> powers;
    powers.reserve(primes.size());
    for (u64 q : primes) powers.push_back(p.pow(q, static_cast<u64>(r)));
    auto invs = batch_inverse(powers, p);
    ComplexKahan acc;
    for (u64 w : invs) acc.add(unit_root(p.mul(a, w), p.value()));
    return acc.result();
}

ComplexSum complete_kloosterman(u64 a, u64 b, const PrimeModulus& p) {
    a %= p.value();
    b %= p.value();
    std::vector<u64> xs(p.value() - 1);
    for (u64 x = 1; x < p.value(); ++x) xs[x - 1] = x;
    auto invs = batch_inverse(xs, p);
    ComplexKahan acc;
    for (u64 x = 1; x < p.value(); ++x)
        acc.add(unit_root(p.add(p.mul(a, invs[x - 1]), p.mul(b, x)), p.value()));
    return acc.result();
}

ComplexSum archimedean_bilinear(double xi, u64 N1, u64 N2) {
    if (N1 < 1 || N2 < 1) throw DomainError("archimedean_bilinear requires N1, N2 >= 1");
    ComplexKahan acc;
    for (u64 n1 = N1 + 1; n1 <= 2 * N1; ++n1)
        for (u64 n2 = N2 + 1; n2 <= 2 * N2; ++n2) {
            double angle = xi / (double(n1) * double(n2));
            acc.add({std::cos(angle), std::sin(angle)});
        }
    return acc.result();
}

double archimedean_gamma(double xi, u64 N1, u64 N2, int k1, int k2) {
    if (xi == 0.0) throw DomainError("archimedean_gamma requires xi != 0");
    if (k1 < 1 || k2 < 1) throw DomainError("archimedean_gamma requires k1, k2 >= 1");
    double ax = std::abs(xi);
    double nn = double(N1) * double(N2);
    auto factor = [&](u64 N, int k) {
        return (ax / nn) * std::pow(double(N), -2.0 * k) +
               (nn / ax) * std::pow(double(N), 2.0 * (k - 1));
    };
    return std::pow(factor(N1, k1) * factor(N2, k2), 1.0 / (4.0 * double(k1) * double(k2)));
}

int choose_archimedean_k(double ratio, u64 N) {
    if (ratio <= 0.0) throw DomainError("choose_archimedean_k requires ratio > 0");
    if (N < 2) throw DomainError("choose_archimedean_k requires N >= 2");
    long double pw = 1.0L;  // N^{2(k-1)}
    long double n2 = static_cast<long double>(N) * static_cast<long double>(N);
    int k = 1;
    while (static_cast<long double>(ratio) >= pw * n2) {
        pw *= n2;
        ++k;
        if (k > 10000) throw DomainError("ratio too large for any sensible k");
    }
    return k;
}

}  // namespace recip
