#include "recip/polyalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "recip/counting.hpp"  // log_mpz

namespace recip {

IntPoly::IntPoly(std::vector<mpz_class> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly({c}); }

IntPoly IntPoly::linear_root_shift(const mpz_class& c) { return IntPoly({c, 1}); }

const mpz_class& IntPoly::coeff(size_t i) const {
    static const mpz_class zero = 0;
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

const mpz_class& IntPoly::leading() const {
    static const mpz_class zero = 0;
    return coeffs_.empty() ? zero : coeffs_.back();
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<mpz_class> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPoly(std::move(out));
}

mpz_class sylvester_resultant(const IntPoly& P, const IntPoly& Q) {
    int m = P.degree(), n = Q.degree();
    if (m < 1 || n < 1)
        throw DomainError("sylvester_resultant requires both degrees >= 1");
    const int dim = m + n;
    // Sylvester matrix: n shifted rows of P's coefficients, m of Q's,
    // highest degree first.
    std::vector<std::vector<mpz_class>> M(dim, std::vector<mpz_class>(dim, 0));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) M[r][r + i] = P.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) M[n + r][r + i] = Q.coeff(n - i);

    // Bareiss fraction-free elimination; every division below is exact.
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < dim - 1; ++k) {
        if (M[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < dim; ++r)
                if (M[r][k] != 0) { swap_row = r; break; }
            if (swap_row < 0) return 0;
            std::swap(M[k], M[swap_row]);
            sign = -sign;
        }
        for (int r = k + 1; r < dim; ++r) {
            for (int c = k + 1; c < dim; ++c) {
                mpz_class num = M[r][c] * M[k][k] - M[r][k] * M[k][c];
                mpz_divexact(M[r][c].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            M[r][k] = 0;
        }
        prev = M[k][k];
    }
    return sign > 0 ? M[dim - 1][dim - 1] : mpz_class(-M[dim - 1][dim - 1]);
}

IntPoly build_solution_poly(const std::vector<mpz_class>& xs) {
    if (xs.empty() || xs.size() % 2 != 0)
        throw DomainError("build_solution_poly needs a tuple of even length 2k >= 2");
    const size_t two_k = xs.size();
    const size_t k = two_k / 2;
    IntPoly acc;
    for (size_t omit = 0; omit < two_k; ++omit) {
        IntPoly prod = IntPoly::constant(1);
        for (size_t j = 0; j < two_k; ++j)
            if (j != omit) prod = prod * IntPoly::linear_root_shift(xs[j]);
        acc = omit < k ? acc + prod : acc - prod;
    }
    return acc;
}

namespace {

// |a| < A * N^(i + sigma), all quantities exact: raise both sides to the
// denominator of the exponent.
bool coeff_within(const mpz_class& a, const mpz_class& A, u64 N, const mpq_class& expo) {
    mpz_class den = expo.get_den();
    mpz_class num = expo.get_num();
    unsigned long d = den.get_ui();
    mpz_class lhs, abs_a = abs(a);
    mpz_pow_ui(lhs.get_mpz_t(), abs_a.get_mpz_t(), d);
    mpz_class rhs;
    mpz_pow_ui(rhs.get_mpz_t(), mpz_class(A).get_mpz_t(), d);
    if (num >= 0) {
        mpz_class np;
        mpz_pow_ui(np.get_mpz_t(), mpz_class(N).get_mpz_t(), num.get_ui());
        rhs *= np;
    } else {
        // N^negative: move it to the left side
        mpz_class np;
        mpz_class mnum = -num;
        mpz_pow_ui(np.get_mpz_t(), mpz_class(N).get_mpz_t(), mnum.get_ui());
        lhs *= np;
    }
    return lhs < rhs;
}

}  // namespace

ResultantBoundReport resultant_bound_check(const IntPoly& P, const IntPoly& Q, u64 N,
                                           const mpq_class& sigma, const mpq_class& theta,
                                           const mpz_class& A) {
    if (N < 1) throw DomainError("resultant_bound_check requires N >= 1");
    if (!(sigma >= 0 || theta >= 0 || sigma + theta >= -1))
        throw HypothesisError("none of sigma>=0, theta>=0, sigma+theta>=-1 holds");
    int m = P.degree() + 1, n = Q.degree() + 1;  // number of coefficients
    if (m < 2 || n < 2) throw DomainError("resultant_bound_check needs nonconstant polynomials");
    for (int i = 0; i < m; ++i)
        if (!coeff_within(P.coeff(m - 1 - i), A, N, sigma + i))
            throw HypothesisError("|a_" + std::to_string(i) + "| >= A*N^(i+sigma) in P");
    for (int i = 0; i < n; ++i)
        if (!coeff_within(Q.coeff(n - 1 - i), A, N, theta + i))
            throw HypothesisError("|b_" + std::to_string(i) + "| >= A*N^(i+theta) in Q");

    ResultantBoundReport rep;
    rep.resultant = sylvester_resultant(P, Q);
    rep.exponent = (mpq_class(m - 1) + sigma) * (mpq_class(n - 1) + theta) - sigma * theta;
    rep.bound = std::exp(rep.exponent.get_d() * std::log(double(N)));
    mpz_class a = abs(rep.resultant);
    rep.ratio = a == 0 ? 0.0 : std::exp(log_mpz(a) - rep.exponent.get_d() * std::log(double(N)));
    return rep;
}

IdentityCheckResult identity_check(const mpq_class& x, const mpq_class& y, const mpq_class& z,
                                   const mpq_class& a1, const mpq_class& a2,
                                   const mpq_class& b1, const mpq_class& b2) {
    mpq_class s1 = x + y + z;
    mpq_class s2 = x * y + y * z + z * x;
    mpq_class s3 = x * y * z;
    if (s3 != a1 * s1 + b1)
        throw HypothesisError("identity_check: xyz = a1(x+y+z) + b1 fails");
    if (s2 != a2 * s1 + b2)
        throw HypothesisError("identity_check: xy+yz+zx = a2(x+y+z) + b2 fails");

    IdentityCheckResult res;
    res.lhs = (x * x - a2 * x + a1) * (y * y - a2 * y + a1) * (z * z - a2 * z + a1);
    // (b1 - α1 b2 - α1^3)(b1 - α2 b2 - α2^3) expanded in the elementary
    // symmetric functions e1 = α1+α2 = a2, e2 = α1·α2 = a1.
    const mpq_class& e1 = a2;
    const mpq_class& e2 = a1;
    mpq_class p3 = e1 * e1 * e1 - 3 * e1 * e2;          // α1^3 + α2^3
    mpq_class q2 = e1 * e1 - 2 * e2;                    // α1^2 + α2^2
    mpq_class e2cube = e2 * e2 * e2;                    // α1^3 α2^3
    res.rhs = b1 * b1 - b1 * b2 * e1 - b1 * p3 + b2 * b2 * e2 + b2 * e2 * q2 + e2cube;
    res.holds = res.lhs == res.rhs;
    return res;
}

std::vector<std::pair<i64, i64>> hyperbola_divisor_solutions(i64 A, i64 B, u64 bound) {
    if (A == 0 || B == 0) throw DomainError("hyperbola_divisor_solutions requires A*B != 0");
    // (Ax + B)(Ay + B) = B^2; enumerate signed divisors d of B^2.
    u64 absB = B < 0 ? static_cast<u64>(-B) : static_cast<u64>(B);
    std::vector<u64> divs{1};
    for (auto [q, e] : factorize(absB)) {
        size_t base = divs.size();
        u64 qe = 1;
        for (int i = 1; i <= 2 * e; ++i) {  // exponents in B^2 are doubled
            qe *= q;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * qe);
        }
    }
    i128 B2 = i128(B) * B;
    std::vector<std::pair<i64, i64>> out;
    for (u64 d0 : divs)
        for (int sgn : {1, -1}) {
            i128 d = i128(sgn) * i128(d0);
            i128 xn = d - B;
            if (xn % A != 0) continue;
            i128 x = xn / A;
            i128 yn = B2 / d - B;
            if (yn % A != 0) continue;
            i128 y = yn / A;
            i128 bd = i128(bound);
            if (x < -bd || x > bd || y < -bd || y > bd) continue;
            out.push_back({static_cast<i64>(x), static_cast<i64>(y)});
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace recip
