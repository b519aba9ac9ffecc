#include "recip/lattice.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace recip {

LatticeSpec LatticeSpec::hyperbola2d(u64 lambda, const PrimeModulus& p) {
    return LatticeSpec(2, lambda % p.value(), 0, p.value());
}

LatticeSpec LatticeSpec::planar3d(u64 c1, u64 c2, const PrimeModulus& p) {
    return LatticeSpec(3, c1 % p.value(), c2 % p.value(), p.value());
}

std::vector<LatticeVector> LatticeSpec::basis() const {
    mpz_class P(static_cast<unsigned long>(p_));
    if (dim_ == 2)
        return {{1, mpz_class(static_cast<unsigned long>(c1_))}, {0, P}};
    mpz_class w1 = P - static_cast<unsigned long>(c1_);
    mpz_class w2 = P - static_cast<unsigned long>(c2_);
    return {{1, 0, w1 == P ? 0 : w1}, {0, 1, w2 == P ? 0 : w2}, {0, 0, P}};
}

bool LatticeSpec::contains(const LatticeVector& x) const {
    mpz_class P(static_cast<unsigned long>(p_));
    mpz_class r;
    if (dim_ == 2)
        r = mpz_class(static_cast<unsigned long>(c1_)) * x[0] - x[1];
    else
        r = mpz_class(static_cast<unsigned long>(c1_)) * x[0] +
            mpz_class(static_cast<unsigned long>(c2_)) * x[1] + x[2];
    return mpz_class(r % P) == 0;
}

Box::Box(std::vector<mpq_class> b) : bounds(std::move(b)) {
    if (bounds.size() < 2 || bounds.size() > 3)
        throw DomainError("box dimension must be 2 or 3");
    bool any_zero = false, any_pos = false;
    for (auto& x : bounds) {
        x.canonicalize();
        if (x < 0) throw DomainError("box bounds must be >= 0");
        (x == 0 ? any_zero : any_pos) = true;
    }
    if (any_zero && any_pos)
        throw DomainError("mixed zero and positive box bounds are not supported");
}

Box Box::of(const std::vector<long>& b) {
    std::vector<mpq_class> q(b.begin(), b.end());
    return Box(std::move(q));
}

bool Box::all_zero() const {
    for (const auto& x : bounds)
        if (x != 0) return false;
    return true;
}

std::optional<mpq_class> box_norm(const LatticeVector& x, const Box& D) {
    mpq_class best = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (D.bounds[i] == 0) {
            if (x[i] != 0) return std::nullopt;
            continue;
        }
        mpq_class t = mpq_class(abs(x[i])) / D.bounds[i];
        if (t > best) best = t;
    }
    return best;
}

namespace {

mpz_class floor_mpq(const mpq_class& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

mpz_class ceil_mpq(const mpq_class& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// Nearest integer (ties toward even do not matter here; half rounds down).
mpz_class round_mpq(const mpq_class& q) { return floor_mpq(q + mpq_class(1, 2)); }

constexpr double kEnumBudget = 8e7;  // outer-grid iterations

// Visit every lattice vector x with |x_i| <= limit_i; limits are floors of
// t * B_i.  The last coordinate is solved from the congruence.
template <typename Fn>
void enumerate_lattice(const LatticeSpec& L, const std::vector<mpz_class>& limit, Fn&& fn) {
    const mpz_class P(static_cast<unsigned long>(L.modulus()));
    auto reduce = [&](const mpz_class& v) {  // into [0, p)
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), P.get_mpz_t());
        return r;
    };
    if (L.dimension() == 2) {
        double outer = 2.0 * limit[0].get_d() + 1.0;
        if (outer > kEnumBudget) throw ResourceError("lattice enumeration range too large");
        mpz_class lam(static_cast<unsigned long>(L.c1()));
        for (mpz_class u = -limit[0]; u <= limit[0]; ++u) {
            mpz_class v0 = reduce(lam * u);
            // v = v0 + k p with |v| <= limit[1]
            mpz_class klo = ceil_mpq(mpq_class(mpz_class(-limit[1] - v0)) / mpq_class(P));
            mpz_class khi = floor_mpq(mpq_class(mpz_class(limit[1] - v0)) / mpq_class(P));
            for (mpz_class k = klo; k <= khi; ++k) {
                mpz_class v = v0 + k * P;
                if (u == 0 && v == 0) continue;
                fn(LatticeVector{u, v});
            }
        }
        return;
    }
    double outer = (2.0 * limit[0].get_d() + 1.0) * (2.0 * limit[1].get_d() + 1.0);
    if (outer > kEnumBudget) throw ResourceError("lattice enumeration range too large");
    mpz_class c1(static_cast<unsigned long>(L.c1())), c2(static_cast<unsigned long>(L.c2()));
    for (mpz_class u = -limit[0]; u <= limit[0]; ++u)
        for (mpz_class v = -limit[1]; v <= limit[1]; ++v) {
            mpz_class w0 = reduce(-(c1 * u + c2 * v));
            mpz_class klo = ceil_mpq(mpq_class(mpz_class(-limit[2] - w0)) / mpq_class(P));
            mpz_class khi = floor_mpq(mpq_class(mpz_class(limit[2] - w0)) / mpq_class(P));
            for (mpz_class k = klo; k <= khi; ++k) {
                mpz_class w = w0 + k * P;
                if (u == 0 && v == 0 && w == 0) continue;
                fn(LatticeVector{u, v, w});
            }
        }
}

// ---- exact basis reduction in the box-scaled Euclidean metric ----
//
// Coordinates are weighted so the box becomes (roughly) a ball: weight
// w_i = den(B_i) * prod_{j != i} num(B_j); then q(x) = sum (x_i w_i)^2.

struct ScaledMetric {
    std::vector<mpz_class> w2;  // squared weights

    explicit ScaledMetric(const Box& D) {
        size_t n = D.dim();
        w2.resize(n);
        for (size_t i = 0; i < n; ++i) {
            mpz_class w = D.bounds[i].get_den();
            for (size_t j = 0; j < n; ++j)
                if (j != i) w *= D.bounds[j].get_num();
            w2[i] = w * w;
        }
    }
    mpz_class dot(const LatticeVector& a, const LatticeVector& b) const {
        mpz_class s = 0;
        for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i] * w2[i];
        return s;
    }
    mpz_class norm(const LatticeVector& a) const { return dot(a, a); }
};

LatticeVector sub_scaled(const LatticeVector& a, const LatticeVector& b, const mpz_class& mu) {
    LatticeVector out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - mu * b[i];
    return out;
}

void lagrange_reduce(std::vector<LatticeVector>& b, const ScaledMetric& m) {
    if (m.norm(b[0]) > m.norm(b[1])) std::swap(b[0], b[1]);
    while (true) {
        mpz_class q0 = m.norm(b[0]);
        mpz_class mu = round_mpq(mpq_class(m.dot(b[0], b[1])) / mpq_class(q0));
        b[1] = sub_scaled(b[1], b[0], mu);
        if (m.norm(b[1]) >= q0) break;
        std::swap(b[0], b[1]);
    }
}

// Textbook LLL (delta = 3/4) with exact rational Gram-Schmidt; n = 3 only.
void lll_reduce(std::vector<LatticeVector>& b, const ScaledMetric& m) {
    const size_t n = b.size();
    std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n, 0));
    std::vector<mpq_class> Bstar(n, 0);
    auto recompute = [&] {
        std::vector<std::vector<mpq_class>> star(n, std::vector<mpq_class>(n, 0));
        for (size_t i = 0; i < n; ++i) {
            for (size_t c = 0; c < n; ++c) star[i][c] = mpq_class(b[i][c]);
            for (size_t j = 0; j < i; ++j) {
                mpq_class d = 0;
                for (size_t c = 0; c < n; ++c)
                    d += mpq_class(b[i][c]) * star[j][c] * mpq_class(m.w2[c]);
                mu[i][j] = Bstar[j] == 0 ? mpq_class(0) : d / Bstar[j];
                for (size_t c = 0; c < n; ++c) star[i][c] -= mu[i][j] * star[j][c];
            }
            Bstar[i] = 0;
            for (size_t c = 0; c < n; ++c)
                Bstar[i] += star[i][c] * star[i][c] * mpq_class(m.w2[c]);
        }
    };
    recompute();
    size_t k = 1;
    int guard = 0;
    while (k < n && ++guard < 10000) {
        for (size_t j = k; j-- > 0;) {
            mpz_class r = round_mpq(mu[k][j]);
            if (r != 0) {
                b[k] = sub_scaled(b[k], b[j], r);
                recompute();
            }
        }
        mpq_class lhs = Bstar[k];
        mpq_class rhs = (mpq_class(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * Bstar[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            recompute();
            k = k > 1 ? k - 1 : 1;
        }
    }
}

int rank_with(const std::vector<LatticeVector>& chosen, const LatticeVector& cand) {
    // rank of chosen + cand, dimensions 2 or 3
    std::vector<LatticeVector> all = chosen;
    all.push_back(cand);
    size_t n = cand.size();
    if (all.size() == 1) return 1;
    if (all.size() == 2) {
        // any 2x2 minor nonzero?
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (all[0][i] * all[1][j] - all[0][j] * all[1][i] != 0) return 2;
        return 1;
    }
    // 3x3 determinant
    const auto& a = all[0];
    const auto& c = all[1];
    const auto& d = all[2];
    mpz_class det = a[0] * (c[1] * d[2] - c[2] * d[1]) - a[1] * (c[0] * d[2] - c[2] * d[0]) +
                    a[2] * (c[0] * d[1] - c[1] * d[0]);
    if (det != 0) return 3;
    return 2;  // caller only needs "did the rank grow"
}

}  // namespace

BoxPointsResult box_points(const LatticeSpec& L, const Box& D) {
    if (static_cast<int>(D.dim()) != L.dimension())
        throw DomainError("box dimension does not match the lattice");
    BoxPointsResult res;
    if (D.all_zero()) {
        res.count = 1;
        res.points.push_back(LatticeVector(D.dim(), mpz_class(0)));
        return res;
    }
    double expected = 1.0;
    for (const auto& bnd : D.bounds) expected *= 2.0 * bnd.get_d() + 1.0;
    if (expected / double(L.modulus()) > 1e7)
        throw ResourceError("box too large: expected point count beyond the 1e7 budget");
    std::vector<mpz_class> limit;
    for (const auto& bnd : D.bounds) limit.push_back(floor_mpq(bnd));
    res.points.push_back(LatticeVector(D.dim(), mpz_class(0)));  // origin
    enumerate_lattice(L, limit, [&](const LatticeVector& x) { res.points.push_back(x); });
    res.count = res.points.size();
    return res;
}

std::vector<std::optional<mpq_class>> successive_minima(const LatticeSpec& L, const Box& D) {
    const int n = L.dimension();
    if (static_cast<int>(D.dim()) != n)
        throw DomainError("box dimension does not match the lattice");
    if (D.all_zero())
        return std::vector<std::optional<mpq_class>>(n, std::nullopt);

    auto basis = L.basis();
    ScaledMetric metric(D);
    if (n == 2)
        lagrange_reduce(basis, metric);
    else
        lll_reduce(basis, metric);

    // Any basis gives n independent vectors, so lambda_n <= T.
    mpq_class T = 0;
    for (const auto& v : basis) {
        auto nb = box_norm(v, D);
        if (*nb > T) T = *nb;
    }

    std::vector<mpz_class> limit;
    for (const auto& bnd : D.bounds) limit.push_back(floor_mpq(T * bnd));
    std::vector<std::pair<mpq_class, LatticeVector>> cands;
    enumerate_lattice(L, limit, [&](const LatticeVector& x) {
        auto nb = box_norm(x, D);
        if (nb && *nb <= T) cands.push_back({*nb, x});
    });
    std::sort(cands.begin(), cands.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<std::optional<mpq_class>> minima;
    std::vector<LatticeVector> chosen;
    for (const auto& [norm, vec] : cands) {
        if (static_cast<int>(chosen.size()) == n) break;
        if (rank_with(chosen, vec) > static_cast<int>(chosen.size())) {
            chosen.push_back(vec);
            minima.push_back(norm);
        }
    }
    if (static_cast<int>(minima.size()) != n)
        throw std::logic_error("reduced basis must realize all successive minima");
    return minima;
}

MinkowskiReport minkowski_check(const LatticeSpec& L, const Box& D) {
    MinkowskiReport rep;
    rep.lattice_points = box_points(L, D).count;
    rep.minima = successive_minima(L, D);
    const int n = L.dimension();
    rep.lemma3_rhs = 1;
    rep.cor2_lhs = 1;
    for (int i = 0; i < n; ++i) {
        if (rep.minima[i]) {
            rep.lemma3_rhs *= mpq_class(2 * (i + 1)) / *rep.minima[i] + 1;
            rep.cor2_lhs *= std::min(*rep.minima[i], mpq_class(1));
        }
        // infinite minimum: 2i/lambda -> 0, min(lambda,1) -> 1
    }
    long dfact = 1;
    for (int i = 3; i <= 2 * n + 1; i += 2) dfact *= i;
    rep.cor2_rhs = mpq_class(dfact) / mpq_class(static_cast<unsigned long>(rep.lattice_points));
    rep.lemma3_pass = mpq_class(static_cast<unsigned long>(rep.lattice_points)) <= rep.lemma3_rhs;
    rep.cor2_pass = rep.cor2_lhs <= rep.cor2_rhs;
    rep.pass = rep.lemma3_pass && rep.cor2_pass;
    return rep;
}

Theorem5Setup theorem5_lattice(u64 lambda, u64 N, int k, const PrimeModulus& p) {
    lambda %= p.value();
    if (lambda == 0) throw DomainError("theorem5_lattice requires lambda nonzero mod p");
    if (N < 1 || k < 1) throw DomainError("theorem5_lattice requires N >= 1, k >= 1");
    mpz_class Nk, Nk1;
    mpz_ui_pow_ui(Nk.get_mpz_t(), N, k);
    mpz_ui_pow_ui(Nk1.get_mpz_t(), N, k - 1);
    Box box({mpq_class(Nk), mpq_class(k) * mpq_class(Nk1)});
    LatticeSpec lat = LatticeSpec::hyperbola2d(lambda, p);
    auto minima = successive_minima(lat, box);
    bool omega_prime = minima[1] && *minima[1] <= 1;
    return Theorem5Setup{lat, box, minima, omega_prime};
}

}  // namespace recip
