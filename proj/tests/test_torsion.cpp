#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "algeo/builtins.hpp"
#include "algeo/torsion.hpp"

using namespace algeo;

namespace {

std::vector<Scalar> basis_vec(const AlgebraPtr &alg, int i) {
    std::vector<Scalar> e(static_cast<std::size_t>(alg->dim()), Scalar::zero(alg->field()));
    e[static_cast<std::size_t>(i)] = Scalar::one(alg->field());
    return e;
}

std::vector<Scalar> eval2(const Cochain &c, const std::vector<Scalar> &x,
                          const std::vector<Scalar> &y) {
    const AlgebraPtr &alg = c.algebra();
    Cochain r = c.eval({Cochain::element(alg, x), Cochain::element(alg, y)});
    std::vector<Scalar> out;
    for (int k = 0; k < alg->dim(); ++k)
        out.push_back(r.coef(0, k));
    return out;
}

Matrix random_endo(const AlgebraPtr &alg, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Matrix m(alg->dim(), alg->dim(), alg->field());
    for (int r = 0; r < alg->dim(); ++r)
        for (int c = 0; c < alg->dim(); ++c)
            m.at(r, c) = Scalar::from_int(alg->field(), static_cast<long long>(rng() % 7) - 3);
    return m;
}

} // namespace

TEST_CASE("defaulted bracket is the commutator, so torsion vanishes") {
    for (const auto &name : {"m2q", "qz3", "sl2", "octonions"}) {
        TorsionAlgebra ta(builtins::by_name(name));
        CHECK_FALSE(ta.bracket_supplied());
        CHECK(ta.torsion().is_zero());
    }
}

TEST_CASE("supplied brackets give nonzero torsion when mu disagrees") {
    TorsionAlgebra ta(builtins::poisson_sl2());
    CHECK(ta.bracket_supplied());
    CHECK(ta.bracket_is_lie());
    // mu = 0, so T = mu_- - [,] = -[,]
    CHECK(ta.torsion() == -Cochain::lie(ta.algebra()));
}

TEST_CASE("half-commutator multiplication has zero torsion against the full bracket") {
    TorsionAlgebra ta(builtins::sl2half());
    CHECK(ta.bracket_supplied());
    CHECK(ta.torsion().is_zero());
}

TEST_CASE("the octonion commutator fails the Jacobi identity") {
    TorsionAlgebra ta(builtins::octonions());
    CHECK_FALSE(ta.bracket_is_lie());
    TorsionAlgebra assoc(builtins::m2q());
    CHECK(assoc.bracket_is_lie());
}

TEST_CASE("identity endomorphism is always a function") {
    for (const auto &name : {"m2q", "octonions", "poisson-sl2"}) {
        TorsionAlgebra ta(builtins::by_name(name));
        CHECK(ta.is_function(Matrix::identity(ta.algebra()->dim(), ta.algebra()->field())).ok);
    }
}

TEST_CASE("non-functions are caught with a basis-pair witness") {
    TorsionAlgebra ta(builtins::m2q());
    FunctionAlgebra fa(ta);
    int found = 0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            Matrix unit(4, 4, ta.algebra()->field());
            unit.at(r, c) = Scalar::one(ta.algebra()->field());
            auto check = ta.is_function(unit);
            if (!check.ok) {
                ++found;
                // the witness replays: D_{phi(e_x)} e_y != phi(e_x e_y)
                std::vector<Scalar> phi_ex(4, Scalar::zero(ta.algebra()->field()));
                for (int k = 0; k < 4; ++k)
                    phi_ex[static_cast<std::size_t>(k)] = unit.at(k, check.x);
                auto lhs = ta.algebra()->multiply(phi_ex, basis_vec(ta.algebra(), check.y));
                auto rhs = unit.apply(ta.algebra()->multiply(basis_vec(ta.algebra(), check.x),
                                                             basis_vec(ta.algebra(), check.y)));
                CHECK(lhs != rhs);
            }
        }
    // every element of the function algebra has rank >= 2 here, so no
    // rank-one matrix unit can be a function
    CHECK(found == 16);
}

TEST_CASE("function algebra of M2 has dimension 4 and a matrix multiplication table") {
    TorsionAlgebra ta(builtins::m2q());
    FunctionAlgebra fa(ta);
    CHECK(fa.dimension() == 4);
    // closed under composition with exact structure constants
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            Matrix prod = fa.basis()[static_cast<std::size_t>(a)] *
                          fa.basis()[static_cast<std::size_t>(b)];
            auto coords = fa.coordinates(prod);
            REQUIRE(coords.has_value());
            CHECK(*coords == fa.table(a, b));
        }
}

TEST_CASE("function algebra dimensions of the other builtins") {
    CHECK(FunctionAlgebra(TorsionAlgebra(builtins::octonions())).dimension() == 1);
    CHECK(FunctionAlgebra(TorsionAlgebra(builtins::zero_algebra(3))).dimension() == 9);
    CHECK(FunctionAlgebra(TorsionAlgebra(builtins::sl2half())).dimension() == 1);
    CHECK(FunctionAlgebra(TorsionAlgebra(builtins::qz3())).dimension() == 3);
}

TEST_CASE("left nucleus of a unital associative algebra matches the function algebra") {
    AlgebraPtr alg = builtins::m2q();
    KernelBasis nucleus = left_nucleus(alg);
    CHECK(nucleus.vectors.size() == 4);
    CHECK(left_nucleus(builtins::octonions()).vectors.size() == 1);
}

TEST_CASE("vector field action is a commutator of operators") {
    TorsionAlgebra ta(builtins::m2q());
    Matrix phi = random_endo(ta.algebra(), 5);
    for (int x = 0; x < 4; ++x) {
        Matrix dx = ta.connection(basis_vec(ta.algebra(), x));
        CHECK(ta.vf_action(basis_vec(ta.algebra(), x), phi) == dx * phi - phi * dx);
    }
}

TEST_CASE("two-of-three decomposition identity") {
    // T(X, phi Y) - phi T(X,Y) = r_ii(Y) + r_iii(Y) + (phi(D_Y X) - D_{phi Y} X)
    for (const auto &name : {"m2q", "sl2", "poisson-sl2", "octonions"}) {
        TorsionAlgebra ta(builtins::by_name(name));
        const AlgebraPtr &alg = ta.algebra();
        int n = alg->dim();
        Matrix phi = random_endo(alg, 42);
        for (int x = 0; x < n; x += 2)
            for (int y = 1; y < n; y += 3) {
                auto ex = basis_vec(alg, x), ey = basis_vec(alg, y);
                auto phi_y = phi.apply(ey);
                auto two = ta.lemma_two_of_three(ex, ey, phi);
                auto lhs = eval2(ta.torsion(), ex, phi_y);
                auto phi_t = phi.apply(eval2(ta.torsion(), ex, ey));
                auto dy_x = ta.connection(ey).apply(ex);
                auto corr1 = phi.apply(dy_x);
                auto corr2 = ta.connection(phi_y).apply(ex);
                for (int k = 0; k < n; ++k) {
                    Scalar rhs = two.residual_ii[static_cast<std::size_t>(k)] +
                                 two.residual_iii[static_cast<std::size_t>(k)] +
                                 corr1[static_cast<std::size_t>(k)] -
                                 corr2[static_cast<std::size_t>(k)];
                    CHECK(lhs[static_cast<std::size_t>(k)] -
                              phi_t[static_cast<std::size_t>(k)] ==
                          rhs);
                }
            }
    }
}

TEST_CASE("derivation-law suite passes on unital associative builtins") {
    for (const auto &name : {"m2q", "qz3"}) {
        TorsionAlgebra ta(builtins::by_name(name));
        FunctionAlgebra fa(ta);
        CHECK(is_regular(ta, fa));
        for (const ClaimResult &c : theorem1_suite(ta, fa)) {
            INFO(name << ": " << c.claim << " " << c.witness);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("a non-regular example is detected") {
    TorsionAlgebra ta(builtins::poisson_sl2());
    FunctionAlgebra fa(ta);
    CHECK(fa.dimension() == 9);
    CHECK_FALSE(is_regular(ta, fa));
}
