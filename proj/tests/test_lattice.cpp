#include <random>

#include "doctest.h"
#include "recip/counting.hpp"
#include "recip/lattice.hpp"

using namespace recip;

TEST_CASE("box points examples") {
    PrimeModulus p5(5), p7(7);
    auto r1 = box_points(LatticeSpec::hyperbola2d(1, p5), Box::of({1, 1}));
    CHECK(r1.count == 3);  // origin, (1,1), (-1,-1)

    auto r2 = box_points(LatticeSpec::hyperbola2d(3, p5), Box::of({0, 0}));
    CHECK(r2.count == 1);

    auto r3 = box_points(LatticeSpec::hyperbola2d(2, p7), Box::of({1, 2}));
    CHECK(r3.count == 3);  // origin, (1,2), (-1,-2)
}

TEST_CASE("box point count is odd") {
    std::mt19937_64 rng(1);
    PrimeModulus p(1009);
    std::uniform_int_distribution<u64> ld(0, 1008);
    std::uniform_int_distribution<long> bd(1, 40);
    for (int trial = 0; trial < 100; ++trial) {
        auto L = LatticeSpec::hyperbola2d(ld(rng), p);
        auto res = box_points(L, Box::of({bd(rng), bd(rng)}));
        CHECK(res.count % 2 == 1);
        for (const auto& pt : res.points) CHECK(L.contains(pt));
    }
}

TEST_CASE("budget guard") {
    PrimeModulus p(101);
    CHECK_THROWS_AS(box_points(LatticeSpec::hyperbola2d(1, p), Box::of({2000000, 2000000})),
                    ResourceError);
}

TEST_CASE("successive minima frozen example") {
    PrimeModulus p(5);
    auto m = successive_minima(LatticeSpec::hyperbola2d(1, p), Box::of({1, 1}));
    REQUIRE(m.size() == 2);
    CHECK(*m[0] == 1);
    CHECK(*m[1] == 3);
}

TEST_CASE("minima ordering and big-box second minimum") {
    std::mt19937_64 rng(2);
    PrimeModulus p(101);
    std::uniform_int_distribution<u64> ld(1, 100);
    for (int trial = 0; trial < 30; ++trial) {
        auto L = LatticeSpec::hyperbola2d(ld(rng), p);
        auto m = successive_minima(L, Box::of({101, 101}));
        CHECK(*m[0] <= *m[1]);
        CHECK(*m[0] > 0);
        CHECK(*m[1] <= 1);  // (0,p) and (1,lambda) both inside
    }
}

TEST_CASE("all-zero box gives infinite minima and a trivial pass") {
    PrimeModulus p(7);
    auto L = LatticeSpec::hyperbola2d(3, p);
    auto m = successive_minima(L, Box(std::vector<mpq_class>{0, 0}));
    CHECK_FALSE(m[0].has_value());
    CHECK_FALSE(m[1].has_value());
    auto rep = minkowski_check(L, Box(std::vector<mpq_class>{0, 0}));
    CHECK(rep.lattice_points == 1);
    CHECK(rep.pass);
}

TEST_CASE("minkowski frozen example") {
    PrimeModulus p(5);
    auto rep = minkowski_check(LatticeSpec::hyperbola2d(1, p), Box::of({1, 1}));
    CHECK(rep.lattice_points == 3);
    CHECK(rep.lemma3_rhs == 7);           // 3 * 7/3
    CHECK(rep.cor2_lhs == 1);             // min(1,1) * min(3,1)
    CHECK(rep.cor2_rhs == mpq_class(5));  // 15 / 3
    CHECK(rep.pass);
}

TEST_CASE("minkowski inequalities hold on random 2D instances") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        u64 pv = std::vector<u64>{101, 1009, 10007}[trial % 3];
        PrimeModulus p(pv);
        std::uniform_int_distribution<u64> ld(0, pv - 1);
        std::uniform_int_distribution<long> bd(1, 50);
        auto rep = minkowski_check(LatticeSpec::hyperbola2d(ld(rng), p), Box::of({bd(rng), bd(rng)}));
        CHECK(rep.pass);
    }
}

TEST_CASE("minkowski inequalities hold on random 3D instances") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 60; ++trial) {
        u64 pv = std::vector<u64>{101, 1009, 10007}[trial % 3];
        PrimeModulus p(pv);
        std::uniform_int_distribution<u64> cd(0, pv - 1);
        std::uniform_int_distribution<long> bd(1, 12);
        auto L = LatticeSpec::planar3d(cd(rng), cd(rng), p);
        auto rep = minkowski_check(L, Box::of({bd(rng), bd(rng), bd(rng)}));
        CHECK(rep.pass);
        CHECK(*rep.minima[0] <= *rep.minima[1]);
        CHECK(*rep.minima[1] <= *rep.minima[2]);
    }
}

TEST_CASE("minima scale inversely with box dilation") {
    std::mt19937_64 rng(5);
    PrimeModulus p(1009);
    std::uniform_int_distribution<u64> ld(0, 1008);
    std::uniform_int_distribution<long> bd(1, 30);
    std::uniform_int_distribution<long> td(1, 5);
    for (int trial = 0; trial < 40; ++trial) {
        auto L = LatticeSpec::hyperbola2d(ld(rng), p);
        long b1 = bd(rng), b2 = bd(rng);
        mpq_class t(td(rng), td(rng));
        t.canonicalize();
        auto base = successive_minima(L, Box::of({b1, b2}));
        auto scaled = successive_minima(L, Box({mpq_class(b1) * t, mpq_class(b2) * t}));
        for (size_t i = 0; i < base.size(); ++i) CHECK(*scaled[i] * t == *base[i]);
    }
}

TEST_CASE("lattice basis has determinant p") {
    PrimeModulus p(101);
    auto L2 = LatticeSpec::hyperbola2d(37, p);
    auto b2 = L2.basis();
    CHECK(b2[0][0] * b2[1][1] - b2[0][1] * b2[1][0] == 101);
    auto L3 = LatticeSpec::planar3d(4, 9, p);
    auto b3 = L3.basis();
    mpz_class det = b3[0][0] * (b3[1][1] * b3[2][2] - b3[1][2] * b3[2][1]) -
                    b3[0][1] * (b3[1][0] * b3[2][2] - b3[1][2] * b3[2][0]) +
                    b3[0][2] * (b3[1][0] * b3[2][1] - b3[1][1] * b3[2][0]);
    CHECK(det == 101);
    for (const auto& row : b2) CHECK(L2.contains(row));
    for (const auto& row : b3) CHECK(L3.contains(row));
}

TEST_CASE("theorem5 setup") {
    PrimeModulus p(101);
    auto setup = theorem5_lattice(1, 2, 2, p);
    CHECK(setup.box.bounds[0] == 4);  // N^k
    CHECK(setup.box.bounds[1] == 4);  // k N^{k-1}
    CHECK_THROWS_AS(theorem5_lattice(0, 2, 2, p), DomainError);
}

TEST_CASE("theorem5 witness puts the first minimum inside the box") {
    std::mt19937_64 rng(6);
    PrimeModulus p(1009);
    std::uniform_int_distribution<u64> xd(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        int k = 2 + trial % 2;
        u64 N = 4;
        std::vector<u64> xs(k);
        for (auto& x : xs) x = xd(rng);
        u64 lambda = 0;
        for (u64 x : xs) lambda = p.add(lambda, mod_inverse(x, p));
        if (lambda == 0) continue;
        auto setup = theorem5_lattice(lambda, N, k, p);
        mpz_class prod = 1, second = 0;
        for (u64 x : xs) prod *= static_cast<unsigned long>(x);
        for (int i = 0; i < k; ++i) {
            mpz_class term = 1;
            for (int j = 0; j < k; ++j)
                if (j != i) term *= static_cast<unsigned long>(xs[j]);
            second += term;
        }
        LatticeVector w{prod, second};
        CHECK(setup.lattice.contains(w));
        auto norm = box_norm(w, setup.box);
        REQUIRE(norm.has_value());
        CHECK(*norm <= 1);
        CHECK(*setup.minima[0] <= 1);
    }
}

TEST_CASE("mixed zero and positive bounds are rejected") {
    CHECK_THROWS_AS(Box(std::vector<mpq_class>{1, 0}), DomainError);
    CHECK_THROWS_AS(Box(std::vector<mpq_class>{mpq_class(-1), mpq_class(2)}), DomainError);
}
