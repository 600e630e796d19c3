#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "algeo/builtins.hpp"
#include "algeo/cochain.hpp"
#include "algeo/suites.hpp"

using namespace algeo;

namespace {

std::vector<Scalar> basis_vec(const AlgebraPtr &alg, int i) {
    std::vector<Scalar> e(static_cast<std::size_t>(alg->dim()), Scalar::zero(alg->field()));
    e[static_cast<std::size_t>(i)] = Scalar::one(alg->field());
    return e;
}

Cochain basis_elt(const AlgebraPtr &alg, int i) {
    return Cochain::element(alg, basis_vec(alg, i));
}

} // namespace

TEST_CASE("mu cochain evaluates to the algebra product") {
    AlgebraPtr alg = builtins::m2q();
    Cochain mu = Cochain::mu(alg);
    CHECK(mu.degree() == 1);
    // e12 * e21 = e11, e21 * e12 = e22
    Cochain p = mu.eval({basis_elt(alg, 1), basis_elt(alg, 2)});
    CHECK(p == basis_elt(alg, 0));
    Cochain q = mu.eval({basis_elt(alg, 2), basis_elt(alg, 1)});
    CHECK(q == basis_elt(alg, 3));
}

TEST_CASE("identity cochain is neutral for insertion") {
    AlgebraPtr alg = builtins::sl2();
    Cochain I = Cochain::identity(alg);
    Cochain mu = Cochain::mu(alg);
    CHECK(comp_i(mu, I, 1) == mu);
    CHECK(comp_i(mu, I, 2) == mu);
    CHECK(comp_i(I, mu, 1) == mu);
    CHECK(insert_pair(mu, I, I, 1, 2) == mu);
    // f o I = (p+1) f and [I, f] = -p f for binary f (p = 1)
    CHECK(comp(mu, I) == mu.scaled(Scalar::from_int(alg->field(), 2)));
    CHECK(bracket(I, mu) == -mu);
    CHECK(bracket(mu, I) == mu);
}

TEST_CASE("comp with a degree -1 left factor is zero") {
    AlgebraPtr alg = builtins::sl2();
    Cochain x = basis_elt(alg, 0);
    CHECK(comp(x, Cochain::mu(alg)).is_zero());
    CHECK(comp(x, x).is_zero());
}

TEST_CASE("slot validation") {
    AlgebraPtr alg = builtins::sl2();
    Cochain mu = Cochain::mu(alg);
    CHECK_THROWS_AS(comp_i(mu, mu, 0), SlotOutOfRange);
    CHECK_THROWS_AS(comp_i(mu, mu, 3), SlotOutOfRange);
    CHECK_THROWS_AS(insert_pair(mu, mu, mu, 1, 1), SlotCollision);
    CHECK_THROWS_AS(comp_i(basis_elt(alg, 0), mu, 1), SlotOutOfRange);
}

TEST_CASE("mixing algebras is rejected") {
    Cochain a = Cochain::mu(builtins::sl2());
    Cochain b = Cochain::mu(builtins::m2q());
    CHECK_THROWS_AS((void)bracket(a, b), MixedAlgebras);
}

TEST_CASE("split of the matrix product gives commutator and Jordan product") {
    AlgebraPtr alg = builtins::m2q();
    auto [jordan, comm] = split_mu(Cochain::mu(alg));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Cochain x = basis_elt(alg, i), y = basis_elt(alg, j);
            auto xy = alg->multiply(basis_vec(alg, i), basis_vec(alg, j));
            auto yx = alg->multiply(basis_vec(alg, j), basis_vec(alg, i));
            std::vector<Scalar> plus(4, Scalar::zero(alg->field()));
            std::vector<Scalar> minus = plus;
            for (int k = 0; k < 4; ++k) {
                plus[static_cast<std::size_t>(k)] =
                    xy[static_cast<std::size_t>(k)] + yx[static_cast<std::size_t>(k)];
                minus[static_cast<std::size_t>(k)] =
                    xy[static_cast<std::size_t>(k)] - yx[static_cast<std::size_t>(k)];
            }
            CHECK(jordan.eval({x, y}) == Cochain::element(alg, plus));
            CHECK(comm.eval({x, y}) == Cochain::element(alg, minus));
        }
    // unnormalized split: mu_+ + mu_- = 2 mu
    Cochain mu = Cochain::mu(alg);
    CHECK(jordan + comm == mu.scaled(Scalar::from_int(alg->field(), 2)));
}

TEST_CASE("commutative product has zero skew part, Lie bracket zero symmetric part") {
    auto [qp, qm] = split_mu(Cochain::mu(builtins::qz3()));
    CHECK(qm.is_zero());
    CHECK_FALSE(qp.is_zero());
    auto [sp, sm] = split_mu(Cochain::mu(builtins::sl2()));
    CHECK(sp.is_zero());
    CHECK(sm == Cochain::mu(builtins::sl2()).scaled(
                    Scalar::from_int(FieldSpec::rationals(), 2)));
}

TEST_CASE("alternation kills symmetric cochains") {
    AlgebraPtr alg = builtins::qz3();
    Cochain mu = Cochain::mu(alg); // commutative
    CHECK(alt_cochain(mu).is_zero());
    Cochain lie = Cochain::mu(builtins::sl2());
    CHECK(alt_cochain(lie) == lie.scaled(Scalar::from_int(alg->field(), 2)));
}

TEST_CASE("permute_inputs relabels argument slots") {
    AlgebraPtr alg = builtins::m2q();
    Cochain mu = Cochain::mu(alg);
    Cochain swapped = permute_inputs(mu, {1, 0});
    Cochain x = basis_elt(alg, 1), y = basis_elt(alg, 2);
    CHECK(swapped.eval({x, y}) == mu.eval({y, x}));
    CHECK(permute_inputs(swapped, {1, 0}) == mu);
    CHECK_THROWS_AS(permute_inputs(mu, {0, 1, 2}), ArityMismatch);
}

TEST_CASE("graded alternation reduces to signed permutation sum") {
    AlgebraPtr alg = builtins::sl2();
    std::mt19937_64 rng(7);
    Cochain f = suites::random_cochain(alg, 0, rng);
    Cochain g = suites::random_cochain(alg, 0, rng);
    Cochain h = suites::random_cochain(alg, 0, rng);
    // fully symmetric operation dies under alternation
    TrilinearOp sym = [](const Cochain &a, const Cochain &b, const Cochain &c) {
        return comp(comp(a, b), c) + comp(comp(a, c), b) + comp(comp(b, a), c) +
               comp(comp(b, c), a) + comp(comp(c, a), b) + comp(comp(c, b), a);
    };
    CHECK(graded_alt3(sym, f, g, h).is_zero());
    // all inputs of degree 0: plain alternation, Koszul signs trivial
    TrilinearOp op = [](const Cochain &a, const Cochain &b, const Cochain &c) {
        return comp(comp(a, b), c);
    };
    Cochain plain = op(f, g, h) - op(f, h, g) - op(g, f, h) + op(g, h, f) + op(h, f, g) -
                    op(h, g, f);
    CHECK(graded_alt3(op, f, g, h) == plain);
}

TEST_CASE("scalar budget guards huge results") {
    std::size_t old = scalar_budget();
    set_scalar_budget(100);
    AlgebraPtr alg = builtins::m2q();
    CHECK_THROWS_AS(Cochain(alg, 3), BudgetExceeded); // 4^4 * 4 = 1024 scalars
    set_scalar_budget(old);
    CHECK_NOTHROW(Cochain(alg, 3));
}

TEST_CASE("coefficient indexing: first argument most significant") {
    AlgebraPtr alg = builtins::m2q();
    Cochain mu = Cochain::mu(alg);
    // e12 * e21 = e11 sits at tuple 1*4+2, output 0
    CHECK(mu.coef(1 * 4 + 2, 0) == Scalar::one(alg->field()));
    CHECK(mu.coef(2 * 4 + 1, 3) == Scalar::one(alg->field()));
    CHECK(mu.coef(1 * 4 + 2, 3).is_zero());
}
