#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "algeo/builtins.hpp"
#include "algeo/hochschild.hpp"
#include "algeo/suites.hpp"

using namespace algeo;

namespace {

std::vector<Scalar> basis_vec(const AlgebraPtr &alg, int i) {
    std::vector<Scalar> e(static_cast<std::size_t>(alg->dim()), Scalar::zero(alg->field()));
    e[static_cast<std::size_t>(i)] = Scalar::one(alg->field());
    return e;
}

} // namespace

TEST_CASE("differential of the identity cochain is mu") {
    for (const auto &name : {"m2q", "sl2", "octonions"}) {
        AlgebraPtr alg = builtins::by_name(name);
        QuasiComplex qc(alg);
        CHECK(qc.differential(qc.identity_cochain()) == qc.mu());
    }
}

TEST_CASE("differential of mu is twice the curvature") {
    AlgebraPtr alg = builtins::octonions();
    QuasiComplex qc(alg);
    CHECK(qc.differential(qc.mu()) ==
          qc.curvature().scaled(Scalar::from_int(alg->field(), 2)));
}

TEST_CASE("curvature evaluates to the associator") {
    AlgebraPtr alg = builtins::octonions();
    QuasiComplex qc(alg);
    const Cochain &alpha = qc.curvature();
    int n = alg->dim();
    for (int triple : {0, 37, 101, 260, 511}) {
        int a = triple / (n * n), b = (triple / n) % n, c = triple % n;
        auto ab = alg->multiply(basis_vec(alg, a), basis_vec(alg, b));
        auto bc = alg->multiply(basis_vec(alg, b), basis_vec(alg, c));
        auto lhs = alg->multiply(ab, basis_vec(alg, c));
        auto rhs = alg->multiply(basis_vec(alg, a), bc);
        for (int k = 0; k < n; ++k)
            CHECK(alpha.coef(static_cast<std::size_t>(triple), k) ==
                  lhs[static_cast<std::size_t>(k)] - rhs[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("associative algebras have a genuine complex") {
    AlgebraPtr alg = builtins::m2q();
    QuasiComplex qc(alg);
    CHECK(qc.is_associative());
    CHECK(qc.is_pre_lie());
    std::mt19937_64 rng(11);
    for (int p = 0; p <= 2; ++p) {
        Cochain f = suites::random_cochain(alg, p, rng);
        CHECK(qc.differential(qc.differential(f)).is_zero());
        // classical sign convention: also a complex, with d_cl f = (-1)^p d f
        CHECK(qc.classical_differential(f) ==
              (p % 2 == 0 ? qc.differential(f) : -qc.differential(f)));
        CHECK(qc.classical_differential(qc.classical_differential(f)).is_zero());
    }
}

TEST_CASE("octonions: nonassociative, not pre-Lie, yet Bianchi and the square formula hold") {
    AlgebraPtr alg = builtins::octonions();
    QuasiComplex qc(alg);
    CHECK_FALSE(qc.is_associative());
    CHECK_FALSE(qc.is_pre_lie());
    CHECK(qc.bianchi_check());
    std::mt19937_64 rng(3);
    CHECK(qc.square_formula_check(suites::random_cochain(alg, 1, rng)));
}

TEST_CASE("alternation of the octonion associator is six times the associator") {
    // alternative algebra: the associator is already alternating
    AlgebraPtr alg = builtins::octonions();
    QuasiComplex qc(alg);
    CHECK(alt_cochain(qc.curvature()) ==
          qc.curvature().scaled(Scalar::from_int(alg->field(), 6)));
}

TEST_CASE("square formula on random F_7 algebras") {
    for (std::uint64_t seed : {0ull, 1ull, 2ull}) {
        AlgebraPtr alg = builtins::random_fp(7, 2, seed);
        QuasiComplex qc(alg);
        CHECK(qc.bianchi_check());
        std::mt19937_64 rng(seed + 17);
        for (int p = 0; p <= 2; ++p)
            CHECK(qc.square_formula_check(suites::random_cochain(alg, p, rng)));
    }
}

TEST_CASE("coherence orders of the builtins") {
    {
        CoherenceReport r = coherence_order(QuasiComplex(builtins::m2q()), 4, 2);
        REQUIRE(r.order.has_value());
        CHECK(*r.order == 2);
    }
    {
        CoherenceReport r = coherence_order(QuasiComplex(builtins::zero_algebra(3)), 4, 2);
        REQUIRE(r.order.has_value());
        CHECK(*r.order == 1);
    }
}

TEST_CASE("left regular representation matrix") {
    AlgebraPtr alg = builtins::m2q();
    QuasiComplex qc(alg);
    // L(e11) maps e11 -> e11, e12 -> e12, e21 -> 0, e22 -> 0
    Matrix l = qc.left_regular(basis_vec(alg, 0));
    CHECK(l.at(0, 0) == Scalar::one(alg->field()));
    CHECK(l.at(1, 1) == Scalar::one(alg->field()));
    CHECK(l.at(2, 2).is_zero());
    CHECK(l.at(3, 3).is_zero());
}

TEST_CASE("representation curvatures on an associative algebra") {
    AlgebraPtr alg = builtins::m2q();
    QuasiComplex qc(alg);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            auto [sigma, kappa] = qc.rep_curvatures(basis_vec(alg, x), basis_vec(alg, y));
            CHECK(sigma.is_zero());
            CHECK(kappa.is_zero());
        }
}

TEST_CASE("sigma on the octonions equals minus the associator") {
    AlgebraPtr alg = builtins::octonions();
    QuasiComplex qc(alg);
    const Cochain &alpha = qc.curvature();
    int n = alg->dim();
    for (int x : {1, 3})
        for (int y : {2, 6}) {
            Matrix sigma = qc.rep_curvatures(basis_vec(alg, x), basis_vec(alg, y)).first;
            for (int z = 0; z < n; ++z) {
                std::size_t tuple =
                    (static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)) * n +
                    static_cast<std::size_t>(z);
                for (int k = 0; k < n; ++k)
                    CHECK(sigma.at(k, z) == -alpha.coef(tuple, k));
            }
        }
}
