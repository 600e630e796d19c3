#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algeo/gerstenhaber.hpp"

using namespace algeo;

TEST_CASE("basis enumeration of the truncated graded space") {
    GerstenhaberCarrier gc(2, 4);
    CHECK(gc.v_dim() == 2);
    CHECK(gc.max_degree() == 3);
    // degree p contributes 2^{p+1} * 2 elements: 4 + 8 + 16 + 32
    CHECK(gc.total_dim() == 60);
    CHECK(gc.basis().front().degree == 0);
    CHECK(gc.basis().back().degree == 3);
    GradedCochain b = gc.basis_element(0);
    auto flat = gc.flatten(b);
    CHECK(flat[0] == Scalar::one(FieldSpec::rationals()));
    for (std::size_t i = 1; i < flat.size(); ++i)
        CHECK(flat[i].is_zero());
}

TEST_CASE("comp flags truncated results instead of dropping them silently") {
    GerstenhaberCarrier gc(2, 3); // degrees 0..2
    std::size_t top = 0;
    for (std::size_t i = 0; i < gc.basis().size(); ++i)
        if (gc.basis()[i].degree == 2)
            top = i;
    auto res = gc.comp(gc.basis_element(top), gc.basis_element(top));
    CHECK(res.truncated);      // degree 4 piece falls outside
    CHECK(res.value.is_zero()); // nothing of degree <= 2 remains
}

TEST_CASE("torsion of the comp carrier vanishes") {
    GerstenhaberCarrier gc(2, 3);
    for (std::size_t i = 0; i < gc.basis().size(); ++i)
        for (std::size_t j = 0; j < gc.basis().size(); ++j) {
            if (gc.basis()[i].degree + gc.basis()[j].degree > gc.max_degree())
                continue;
            auto t = gc.torsion(gc.basis_element(i), gc.basis_element(j));
            CHECK_FALSE(t.truncated);
            CHECK(t.value.is_zero());
        }
}

TEST_CASE("left multiplication by degree-0 elements is a homomorphism") {
    GerstenhaberCarrier gc(2, 3);
    std::vector<std::size_t> deg0;
    for (std::size_t i = 0; i < gc.basis().size(); ++i)
        if (gc.basis()[i].degree == 0)
            deg0.push_back(i);
    for (std::size_t i : deg0)
        for (std::size_t j : deg0) {
            GradedCochain f = gc.basis_element(i), g = gc.basis_element(j);
            auto fg = gc.comp(f, g);
            REQUIRE_FALSE(fg.truncated);
            CHECK(gc.left_mult_matrix(f) * gc.left_mult_matrix(g) ==
                  gc.left_mult_matrix(fg.value));
        }
}

TEST_CASE("left multiplication matrix is only defined in degree 0") {
    GerstenhaberCarrier gc(2, 3);
    std::size_t deg1 = 0;
    while (gc.basis()[deg1].degree != 1)
        ++deg1;
    CHECK_THROWS_AS(gc.left_mult_matrix(gc.basis_element(deg1)), Truncated);
}

TEST_CASE("degree-0 elements satisfy the function condition, degree-1 elements fail") {
    GerstenhaberCarrier gc(2, 4);
    for (std::size_t i = 0; i < gc.basis().size(); ++i) {
        GradedCochain f = gc.basis_element(i);
        auto w = gc.function_violation(f);
        if (gc.basis()[i].degree == 0) {
            CHECK_FALSE(w.has_value());
        } else if (gc.basis()[i].degree == 1) {
            REQUIRE(w.has_value());
            // replay the witness
            GradedCochain x = gc.basis_element(w->x), y = gc.basis_element(w->y);
            auto fx = gc.comp(f, x);
            auto xy = gc.comp(x, y);
            REQUIRE_FALSE(fx.truncated);
            REQUIRE_FALSE(xy.truncated);
            auto lhs = gc.comp(fx.value, y);
            auto rhs = gc.comp(f, xy.value);
            CHECK(gc.flatten(lhs.value) != gc.flatten(rhs.value));
        }
    }
}

TEST_CASE("carrier construction validates its inputs") {
    CHECK_THROWS_AS(GerstenhaberCarrier(0, 4), ValidationError);
    CHECK_THROWS_AS(GerstenhaberCarrier(2, 1), ValidationError);
}
