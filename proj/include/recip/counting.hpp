#ifndef RECIP_COUNTING_HPP
#define RECIP_COUNTING_HPP

#include <gmpxx.h>

#include <vector>

#include "recip/distribution.hpp"
#include "recip/modmath.hpp"

namespace recip {

/// Result of an energy count: the exact J, the parameters, and the
/// log J / log N exponent next to the predicted one.
struct CountReport {
    mpz_class J;
    u64 N = 0;
    int k = 0;
    u64 p = 0;
    mpq_class predicted_exponent;
    double measured_exponent = 0.0;
    double wall_time = 0.0;
};

// ln of a big integer, accurate to ~1e-15 relative.
double log_mpz(const mpz_class& z);
double exponent_of(const mpz_class& J, u64 N);

// Distribution of x_1^-1 + ... + x_k^-1 over k-tuples from I.
ResidueDistribution inverse_sum_distribution(const Interval& I, int k, const PrimeModulus& p,
                                             Backend backend = Backend::Auto, int threads = 1);

// Same with one base set per slot (sums x_1 + ... + x_m, x_i in base_i).
ResidueDistribution sum_distribution(const std::vector<std::vector<u64>>& bases,
                                     const PrimeModulus& p, Backend backend = Backend::Auto,
                                     int threads = 1);

// J_{2k}: ordered 2k-tuples from I with equal k-fold inverse sums.
CountReport count_J2k(const Interval& I, int k, const PrimeModulus& p,
                      Backend backend = Backend::Auto, int threads = 1);

// J_{2k} with the variables restricted to primes <= N (I = [1, N]).
CountReport count_J2k_prime(u64 N, int k, const PrimeModulus& p,
                            Backend backend = Backend::Auto);

struct TernaryCount {
    u64 count = 0;
    // Set when lambda lies in I^-1 union {0}, the case excluded by the
    // ternary bound's hypothesis (the count itself is still exact).
    bool lambda_excluded = false;
};

// Ordered triples (x,y,z) in I^3 with x^-1 + y^-1 + z^-1 = lambda.
TernaryCount ternary_count(const Interval& I, u64 lambda, const PrimeModulus& p);

// Number of distinct residues attained by k-fold inverse sums.
u64 sumset_size(const Interval& I, int k, const PrimeModulus& p,
                Backend backend = Backend::Auto);

// Ordered pairs (x,y) in I^2 with x*y = lambda (lambda nonzero).
u64 hyperbola_count(const Interval& I, u64 lambda, const PrimeModulus& p);

// Ordered pairs with x^-1 + y^-1 = lambda, via the completion
// (x - lambda^-1)(y - lambda^-1) = lambda^-2.
u64 inverse_pair_count(const Interval& I, u64 lambda, const PrimeModulus& p);

// Ordered triples with x*y*z = lambda.
u64 triple_product_count(const Interval& I, u64 lambda, const PrimeModulus& p);

// Quadruples xy = zt with (x,z) in I1^2, (y,t) in I2^2.
mpz_class mult_energy(const Interval& I1, const Interval& I2, const PrimeModulus& p);

// Solutions of 1/x_1 + ... + 1/x_k = 1/x_{k+1} + ... + 1/x_{2k} over Q,
// x_i in [1, N].
mpz_class rational_J2k(u64 N, int k);

// 2r-tuples with equal r-fold sums of 1/(sigma + x_i) over Q, x_i in [1, N].
mpz_class rational_shifted_count(const RationalPair& sigma, u64 N, int r);

// r-tuples from S with c_1 x_1 + ... + c_r x_r = c, exact over Q.
mpz_class weighted_solution_count(const std::vector<mpq_class>& coeffs, const mpq_class& c,
                                  const std::vector<mpq_class>& S);

// Ordered triples 1 <= x_i <= N, a0 + b0 x_i != 0, with
// u0 (X1 X2 X3) = v0 b0 (X1 X2 + X2 X3 + X3 X1),  X_i = a0 + b0 x_i.
mpz_class dioph_3I_count(i64 a0, i64 b0, i64 u0, i64 v0, u64 N);

}  // namespace recip

#endif
