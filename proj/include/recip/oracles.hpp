#ifndef RECIP_ORACLES_HPP
#define RECIP_ORACLES_HPP

#include <gmpxx.h>

#include <vector>

#include "recip/counting.hpp"
#include "recip/modmath.hpp"

// Brute-force reference counters.  These deliberately share no code with the
// fast paths in counting.cpp: they enumerate tuples one by one, and exist so
// the verify suites can check the fast implementations against them.
namespace recip::oracles {

// Full O(N^{2k}) enumeration of J_{2k}.
mpz_class naive_count_J2k(const Interval& I, int k, const PrimeModulus& p);

u64 naive_ternary_count(const Interval& I, u64 lambda, const PrimeModulus& p);
u64 naive_inverse_pair_count(const Interval& I, u64 lambda, const PrimeModulus& p);
u64 naive_hyperbola_count(const Interval& I, u64 lambda, const PrimeModulus& p);
u64 naive_triple_product_count(const Interval& I, u64 lambda, const PrimeModulus& p);
mpz_class naive_mult_energy(const Interval& I1, const Interval& I2, const PrimeModulus& p);
u64 naive_sumset_size(const Interval& I, int k, const PrimeModulus& p);
mpz_class naive_rational_J2k(u64 N, int k);

// Exhaustive search over v <= floor(sqrt(p)) for the canonical pair.
RationalPair naive_rational_reconstruct(u64 j, const PrimeModulus& p);

u64 naive_smooth_count(u64 x, u64 y);
u64 naive_divisor_count(u64 n);

// Number of 2s-tuples from S with equal s-fold plain sums (over Q).
mpz_class rational_symmetric_energy(const std::vector<mpq_class>& S, int s);

}  // namespace recip::oracles

#endif
