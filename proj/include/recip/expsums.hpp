#ifndef RECIP_EXPSUMS_HPP
#define RECIP_EXPSUMS_HPP

#include <complex>
#include <vector>

#include "recip/modmath.hpp"

namespace recip {

/// A complex sum together with the number of summands, so callers can
/// normalize and sanity-check against the triangle inequality.
struct ComplexSum {
    double re = 0.0;
    double im = 0.0;
    u64 terms = 0;

    std::complex<double> value() const { return {re, im}; }
    double modulus() const { return std::abs(value()); }
    double normalized() const { return terms ? modulus() / double(terms) : 0.0; }
};

/// Complex weights aligned to an interval, sup-norm at most 1.
class CoeffSeq {
public:
    explicit CoeffSeq(std::vector<std::complex<double>> values);
    static CoeffSeq ones(u64 n);

    size_t size() const { return values_.size(); }
    const std::complex<double>& operator[](size_t i) const { return values_[i]; }

private:
    std::vector<std::complex<double>> values_;
};

// e_p(z) = exp(2 pi i z / p)
std::complex<double> unit_root(u64 z, u64 p);

// sum over x in I of e_p(a x^-1)
ComplexSum linear_incomplete(u64 a, const Interval& I, const PrimeModulus& p);

struct MaxScanResult {
    u64 a_star = 0;
    double magnitude = 0.0;
};

// max over a in [1, p-1] of |linear_incomplete(a, I, p)|, computed from the
// length-p DFT of the inverse-interval indicator; ties -> smallest a.
// Requires p <= 2^24.
MaxScanResult max_linear_over_a(const Interval& I, const PrimeModulus& p);

// Stratified random sample of the same scan for moduli too large for the
// dense DFT; covers `samples` values of a drawn from equal strata.
MaxScanResult max_linear_sampled(const Interval& I, const PrimeModulus& p, u64 samples, u64 seed);

// sum over (x1, x2) of alpha1(x1) alpha2(x2) e_p(a x1^-1 x2^-1)
ComplexSum bilinear(u64 a, const Interval& I1, const Interval& I2, const CoeffSeq& alpha1,
                    const CoeffSeq& alpha2, const PrimeModulus& p);

// n-fold generalization; for n > 2 and dense p the evaluation goes through
// the distribution of partial inverse products.
ComplexSum multilinear(u64 a, const std::vector<Interval>& intervals,
                       const std::vector<CoeffSeq>& coeffs, const PrimeModulus& p,
                       u64 term_budget = 1000000000ull);

// sum over primes x <= N of e_p(a (x^r)^-1)
ComplexSum prime_sum_power_r(u64 a, u64 N, int r, const PrimeModulus& p);

// sum over x in [1, p-1] of e_p(a x^-1 + b x)
ComplexSum complete_kloosterman(u64 a, u64 b, const PrimeModulus& p);

// sum over n1 ~ N1, n2 ~ N2 of exp(i xi / (n1 n2)); n ~ N means (N, 2N].
ComplexSum archimedean_bilinear(double xi, u64 N1, u64 N2);

// The dilation factor gamma of the archimedean bilinear bound.
double archimedean_gamma(double xi, u64 N1, u64 N2, int k1, int k2);

// Unique k >= 1 with N^{2(k-1)} <= ratio < N^{2k} (ratio = |xi| / (N1 N2)).
int choose_archimedean_k(double ratio, u64 N);

}  // namespace recip

#endif
