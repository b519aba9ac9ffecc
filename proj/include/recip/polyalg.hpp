#ifndef RECIP_POLYALG_HPP
#define RECIP_POLYALG_HPP

#include <gmpxx.h>

#include <vector>

#include "recip/errors.hpp"
#include "recip/modmath.hpp"

namespace recip {

/// Univariate polynomial with big-integer coefficients, stored low degree
/// first and normalized (no zero leading coefficient; zero poly is empty).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> ascending_coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(const mpz_class& c);
    // Z + c
    static IntPoly linear_root_shift(const mpz_class& c);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Coefficient of Z^i (0 when i > degree).
    const mpz_class& coeff(size_t i) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& leading() const;

    mpz_class eval(const mpz_class& x) const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;

    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<mpz_class> coeffs_;
};

// Resultant as the Sylvester determinant, Bareiss fraction-free elimination.
// Both polynomials must be nonconstant.
mpz_class sylvester_resultant(const IntPoly& P, const IntPoly& Q);

// For a 2k-tuple (x_1..x_2k):
//   sum_{i<=k} prod_{j != i} (Z + x_j)  -  sum_{i>k} prod_{j != i} (Z + x_j).
// Degree <= 2k-2 (the 2k leading terms cancel).
IntPoly build_solution_poly(const std::vector<mpz_class>& xs);

struct ResultantBoundReport {
    mpz_class resultant;
    mpq_class exponent;   // (m-1+sigma)(n-1+theta) - sigma*theta
    double bound = 0.0;   // N^exponent
    double ratio = 0.0;   // |Res| / bound
};

// Lemma hypothesis check (|a_i| < A N^{i+sigma}, one of sigma>=0 /
// theta>=0 / sigma+theta>=-1) followed by the bound comparison.
// Coefficient indexing follows P = sum_i a_i Z^{m-1-i}.
ResultantBoundReport resultant_bound_check(const IntPoly& P, const IntPoly& Q, u64 N,
                                           const mpq_class& sigma, const mpq_class& theta,
                                           const mpz_class& A);

struct IdentityCheckResult {
    bool holds = false;
    mpq_class lhs;
    mpq_class rhs;
};

// The cubic identity: given xyz = a1(x+y+z) + b1 and
// xy+yz+zx = a2(x+y+z) + b2 (hypotheses, checked), tests
//   (x^2-a2x+a1)(y^2-a2y+a1)(z^2-a2z+a1) = (b1-α1b2-α1^3)(b1-α2b2-α2^3)
// with the right side expanded through α1+α2 = a2, α1α2 = a1 so no
// radicals appear.
IdentityCheckResult identity_check(const mpq_class& x, const mpq_class& y, const mpq_class& z,
                                   const mpq_class& a1, const mpq_class& a2,
                                   const mpq_class& b1, const mpq_class& b2);

// Integer solutions of A x y + B x + B y = 0 with |x|,|y| <= bound,
// via (Ax+B)(Ay+B) = B^2 and the divisors of B^2.
std::vector<std::pair<i64, i64>> hyperbola_divisor_solutions(i64 A, i64 B, u64 bound);

}  // namespace recip

#endif
