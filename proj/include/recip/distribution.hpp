#ifndef RECIP_DISTRIBUTION_HPP
#define RECIP_DISTRIBUTION_HPP

#include <gmpxx.h>

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "recip/modmath.hpp"

namespace recip {

enum class Backend { Dense, Sparse, Auto };

mpz_class u128_to_mpz(u128 x);

/// Map residue -> exact count: the paper's T(lambda), J(lambda), eta(lambda).
/// Dense keeps a length-p vector (p <= 2^24), sparse a hash of the nonzero
/// entries (any p < 2^63).
class ResidueDistribution {
public:
    static constexpr u64 kDenseLimit = 1ull << 24;

    ResidueDistribution(const PrimeModulus& p, Backend backend);

    u64 modulus() const { return p_; }
    bool dense() const { return dense_backend_; }

    void add(u64 residue, u64 count = 1);
    u64 value(u64 residue) const;

    u64 total_mass() const { return mass_; }
    u64 support_size() const;
    u64 max_value() const;
    // Sum of squared counts (the symmetric-energy functional).
    mpz_class energy() const;

    // Nonzero entries as (residue, count), ascending residues.
    std::vector<std::pair<u64, u64>> entries() const;

    bool same_entries(const ResidueDistribution& other) const;

    const std::vector<u64>& dense_data() const { return dense_; }

private:
    u64 p_;
    bool dense_backend_;
    u64 mass_ = 0;
    std::vector<u64> dense_;
    std::unordered_map<u64, u64> sparse_;
};

}  // namespace recip

#endif
