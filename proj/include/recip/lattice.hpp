#ifndef RECIP_LATTICE_HPP
#define RECIP_LATTICE_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "recip/modmath.hpp"

namespace recip {

using LatticeVector = std::vector<mpz_class>;

/// Congruence-defined integer lattice of determinant p:
///   2D: { (u,v) : lambda*u = v (mod p) }
///   3D: { (u,v,w) : c1*u + c2*v + w = 0 (mod p) }
class LatticeSpec {
public:
    static LatticeSpec hyperbola2d(u64 lambda, const PrimeModulus& p);
    static LatticeSpec planar3d(u64 c1, u64 c2, const PrimeModulus& p);

    int dimension() const { return dim_; }
    u64 modulus() const { return p_; }
    u64 c1() const { return c1_; }
    u64 c2() const { return c2_; }

    // Row basis; lower-triangular with determinant p.
    std::vector<LatticeVector> basis() const;
    bool contains(const LatticeVector& x) const;

private:
    LatticeSpec(int dim, u64 c1, u64 c2, u64 p) : dim_(dim), p_(p), c1_(c1), c2_(c2) {}
    int dim_;
    u64 p_;
    u64 c1_;  // 2D: lambda; 3D: coefficient of u
    u64 c2_;  // 3D only: coefficient of v
};

/// Axis box |x_i| <= bounds[i]; convex, compact, symmetric about 0.
struct Box {
    std::vector<mpq_class> bounds;

    explicit Box(std::vector<mpq_class> b);
    static Box of(const std::vector<long>& b);
    size_t dim() const { return bounds.size(); }
    bool all_zero() const;
};

// max_i |x_i| / B_i as an exact rational; nullopt encodes +infinity
// (some x_i != 0 where B_i = 0).
std::optional<mpq_class> box_norm(const LatticeVector& x, const Box& D);

struct BoxPointsResult {
    u64 count = 0;  // includes the origin
    std::vector<LatticeVector> points;
};

// All lattice points inside D (budgeted; ResourceError beyond it).
BoxPointsResult box_points(const LatticeSpec& L, const Box& D);

// Successive minima lambda_1 <= ... <= lambda_n of D with respect to L,
// exact rationals; nullopt = infinite (degenerate all-zero box).
std::vector<std::optional<mpq_class>> successive_minima(const LatticeSpec& L, const Box& D);

struct MinkowskiReport {
    u64 lattice_points = 0;
    std::vector<std::optional<mpq_class>> minima;
    mpq_class lemma3_rhs;  // prod (2i / lambda_i + 1)
    bool lemma3_pass = false;
    mpq_class cor2_lhs;    // prod min(lambda_i, 1)
    mpq_class cor2_rhs;    // (2n+1)!! / |D cap Gamma|
    bool cor2_pass = false;
    bool pass = false;
};

// Exact evaluation of both point-count inequalities.
MinkowskiReport minkowski_check(const LatticeSpec& L, const Box& D);

struct Theorem5Setup {
    LatticeSpec lattice;
    Box box;  // (N^k, k N^{k-1})
    std::vector<std::optional<mpq_class>> minima;
    bool omega_prime = false;  // second minimum <= 1
};

Theorem5Setup theorem5_lattice(u64 lambda, u64 N, int k, const PrimeModulus& p);

}  // namespace recip

#endif
