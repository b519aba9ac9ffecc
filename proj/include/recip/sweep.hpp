#ifndef RECIP_SWEEP_HPP
#define RECIP_SWEEP_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

#include "recip/distribution.hpp"
#include "recip/report.hpp"

namespace recip {

/// Parameter grid for one theorem's sweep.  Axes the theorem does not use
/// are ignored; the used ones must be nonempty.
struct SweepConfig {
    std::string theorem;  // T1..T6, T8..T15, T17, BT
    std::vector<u64> p_list;
    std::vector<u64> N_list;
    std::vector<u64> N2_list;      // second interval length (bilinear); defaults to N_list
    std::vector<int> k_list;       // k (and k1 for bilinear)
    std::vector<int> k2_list;      // k2 for bilinear; defaults to k_list
    std::vector<int> n_list;       // factor count for multilinear
    std::vector<u64> a_offsets;    // interval offsets; defaults to {0}
    std::vector<double> xi_list;   // T15
    std::vector<double> theta_list;  // BT
    u64 bt_x = 1000000;
    Backend backend = Backend::Auto;
    u64 seed = 1;
    int threads = 1;
    u64 samples = 32;              // sampled coefficients a per grid point
    mpq_class t4_c = mpq_class(1, 4);
    double slack = 0.4;            // exponent slack absorbing o(1) factors
};

// One record per grid point, in grid order, deterministic given the seed.
// When `stream` is nonnull every record is also written there as produced.
std::vector<ResultRecord> run_sweep(const SweepConfig& config, std::ostream* stream = nullptr);

struct CheckLine {
    std::string name;
    u64 passed = 0;
    u64 total = 0;
    bool ok() const { return passed == total; }
};

struct VerifyReport {
    std::vector<CheckLine> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok()) return false;
        return true;
    }
};

// suite in {oracle, identities, lattice, weil, transfer, all}
VerifyReport verify_suite(const std::string& suite);

struct BTRow {
    double theta = 0.0;
    u64 q = 0;
    u64 pi_count = 0;
    double c_measured = 0.0;  // pi(x;q,1) * phi(q) * log(x/q) / x
};

// Brun-Titchmarsh table at q = nearest prime to x^theta, a = 1.
std::vector<BTRow> brun_titchmarsh_report(u64 x, const std::vector<double>& theta_grid);

}  // namespace recip

#endif
