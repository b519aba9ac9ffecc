#include "recip/distribution.hpp"

#include <algorithm>
#include <string>

namespace recip {

mpz_class u128_to_mpz(u128 x) {
    mpz_class hi = static_cast<unsigned long>(x >> 64);
    mpz_class lo = static_cast<unsigned long>(x & 0xffffffffffffffffull);
    return (hi << 64) + lo;
}

ResidueDistribution::ResidueDistribution(const PrimeModulus& p, Backend backend)
    : p_(p.value()) {
    if (backend == Backend::Auto) backend = p_ <= kDenseLimit ? Backend::Dense : Backend::Sparse;
    if (backend == Backend::Dense && p_ > kDenseLimit)
        throw ResourceError("dense distribution needs p <= 2^24 (p = " + std::to_string(p_) +
                            "); use the sparse backend");
    dense_backend_ = backend == Backend::Dense;
    if (dense_backend_) dense_.assign(p_, 0);
}

void ResidueDistribution::add(u64 residue, u64 count) {
    if (count == 0) return;
    if (dense_backend_)
        dense_[residue] += count;
    else
        sparse_[residue] += count;
    mass_ += count;
}

u64 ResidueDistribution::value(u64 residue) const {
    if (dense_backend_) return dense_[residue];
    auto it = sparse_.find(residue);
    return it == sparse_.end() ? 0 : it->second;
}

u64 ResidueDistribution::support_size() const {
    if (!dense_backend_) return sparse_.size();
    u64 n = 0;
    for (u64 c : dense_)
        if (c) ++n;
    return n;
}

u64 ResidueDistribution::max_value() const {
    u64 best = 0;
    if (dense_backend_) {
        for (u64 c : dense_) best = std::max(best, c);
    } else {
        for (const auto& [r, c] : sparse_) best = std::max(best, c);
    }
    return best;
}

mpz_class ResidueDistribution::energy() const {
    u128 e = 0;
    if (dense_backend_) {
        for (u64 c : dense_) e += static_cast<u128>(c) * c;
    } else {
        for (const auto& [r, c] : sparse_) e += static_cast<u128>(c) * c;
    }
    return u128_to_mpz(e);
}

std::vector<std::pair<u64, u64>> ResidueDistribution::entries() const {
    std::vector<std::pair<u64, u64>> out;
    if (dense_backend_) {
        for (u64 r = 0; r < p_; ++r)
            if (dense_[r]) out.push_back({r, dense_[r]});
    } else {
        out.assign(sparse_.begin(), sparse_.end());
        std::sort(out.begin(), out.end());
    }
    return out;
}

bool ResidueDistribution::same_entries(const ResidueDistribution& other) const {
    return p_ == other.p_ && mass_ == other.mass_ && entries() == other.entries();
}

}  // namespace recip
