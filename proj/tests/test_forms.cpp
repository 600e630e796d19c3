#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "algeo/builtins.hpp"
#include "algeo/forms.hpp"

using namespace algeo;

namespace {

std::vector<Scalar> basis_vec(int n, int i, FieldSpec f) {
    std::vector<Scalar> e(static_cast<std::size_t>(n), Scalar::zero(f));
    e[static_cast<std::size_t>(i)] = Scalar::one(f);
    return e;
}

CarrierPtr vf_carrier(const AlgebraPtr &alg) {
    return std::make_shared<const ModuleCarrier>(TorsionAlgebra(alg),
                                                 ModuleCarrier::Kind::vector_fields);
}

DForm random_dform(const CarrierPtr &mc, int degree, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::size_t tuples = 1;
    for (int a = 0; a < degree; ++a)
        tuples *= static_cast<std::size_t>(mc->base_dim());
    FormTensor t{mc, degree, {}};
    t.values.assign(tuples * static_cast<std::size_t>(mc->dim()),
                    Scalar::zero(mc->field()));
    for (auto &v : t.values)
        v = Scalar::from_int(mc->field(), static_cast<long long>(rng() % 7) - 3);
    FormTensor alt = degree >= 2 ? alternate(t) : t;
    return DForm::from_values(mc, degree, std::move(alt.values));
}

} // namespace

TEST_CASE("vector-field carrier derivation is left multiplication") {
    AlgebraPtr alg = builtins::m2q();
    CarrierPtr mc = vf_carrier(alg);
    CHECK(mc->dim() == 4);
    // D_{e12} e21 = e12 e21 = e11
    auto img = mc->derivation(1).apply(basis_vec(4, 2, alg->field()));
    CHECK(img == basis_vec(4, 0, alg->field()));
}

TEST_CASE("non-alternating coefficient arrays are rejected") {
    AlgebraPtr alg = builtins::sl2();
    CarrierPtr mc = vf_carrier(alg);
    std::vector<Scalar> values(9 * 3, Scalar::zero(alg->field()));
    values[0 * 3 + 0] = Scalar::one(alg->field()); // omega(e0, e0) != 0
    CHECK_THROWS_AS(DForm::from_values(mc, 2, values), ValidationError);
}

TEST_CASE("differential of a 0-form is twice the derivation") {
    AlgebraPtr alg = builtins::m2q();
    CarrierPtr mc = vf_carrier(alg);
    for (int u = 0; u < 4; ++u) {
        DForm u0 = DForm::from_values(mc, 0, basis_vec(4, u, alg->field()));
        FormTensor du = hoch_form_differential(u0);
        for (int x = 0; x < 4; ++x) {
            auto lhs = du.value({x});
            auto d = mc->derivation(x).apply(basis_vec(4, u, alg->field()));
            for (int k = 0; k < 4; ++k)
                CHECK(lhs[static_cast<std::size_t>(k)] ==
                      d[static_cast<std::size_t>(k)] + d[static_cast<std::size_t>(k)]);
        }
    }
}

TEST_CASE("second differential equals the curvature operator") {
    for (const auto &name : {"m2q", "sl2", "octonions", "poisson-sl2"}) {
        AlgebraPtr alg = builtins::by_name(name);
        CarrierPtr mc = vf_carrier(alg);
        int n = alg->dim(), m = mc->dim();
        for (int u = 0; u < m; u += 3) {
            DForm u0 = DForm::from_values(mc, 0, basis_vec(m, u, alg->field()));
            FormTensor ddu = hoch_form_differential(hoch_form_differential(u0));
            for (int x = 0; x < n; x += 2)
                for (int y = 0; y < n; y += 3) {
                    Matrix K = curvature_K(*mc, basis_vec(n, x, alg->field()),
                                           basis_vec(n, y, alg->field()));
                    CHECK(ddu.value({x, y}) == K.apply(basis_vec(m, u, alg->field())));
                }
        }
    }
}

TEST_CASE("curvature vanishes for associative carriers and not for the octonions") {
    {
        AlgebraPtr alg = builtins::m2q();
        CarrierPtr mc = vf_carrier(alg);
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y)
                CHECK(curvature_K(*mc, basis_vec(4, x, alg->field()),
                                  basis_vec(4, y, alg->field()))
                          .is_zero());
    }
    {
        AlgebraPtr alg = builtins::octonions();
        CarrierPtr mc = vf_carrier(alg);
        bool nonzero = false;
        for (int x = 1; x < 8 && !nonzero; ++x)
            for (int y = x + 1; y < 8 && !nonzero; ++y)
                nonzero = !curvature_K(*mc, basis_vec(8, x, alg->field()),
                                       basis_vec(8, y, alg->field()))
                               .is_zero();
        CHECK(nonzero);
    }
}

TEST_CASE("curvature is antisymmetric") {
    AlgebraPtr alg = builtins::octonions();
    CarrierPtr mc = vf_carrier(alg);
    for (int x : {1, 4})
        for (int y : {2, 7}) {
            Matrix a = curvature_K(*mc, basis_vec(8, x, alg->field()),
                                   basis_vec(8, y, alg->field()));
            Matrix b = curvature_K(*mc, basis_vec(8, y, alg->field()),
                                   basis_vec(8, x, alg->field()));
            CHECK((a + b).is_zero());
        }
    CHECK(curvature_K(*mc, basis_vec(8, 3, alg->field()), basis_vec(8, 3, alg->field()))
              .is_zero());
}

TEST_CASE("interior product contracts the first slot and squares to zero") {
    AlgebraPtr alg = builtins::sl2();
    CarrierPtr mc = vf_carrier(alg);
    DForm w = random_dform(mc, 2, 9);
    for (int x = 0; x < 3; ++x) {
        auto ex = basis_vec(3, x, alg->field());
        DForm ix = interior(ex, w);
        CHECK(ix.degree() == 1);
        for (int y = 0; y < 3; ++y)
            CHECK(ix.value({y}) == w.value({x, y}));
        CHECK(interior(ex, ix).is_zero());
    }
    DForm zero0(mc, 0);
    CHECK_THROWS_AS(interior(basis_vec(3, 0, alg->field()), zero0), DegreeUnderflow);
}

TEST_CASE("interior products anticommute on 2-forms") {
    AlgebraPtr alg = builtins::m2q();
    CarrierPtr mc = vf_carrier(alg);
    DForm w = random_dform(mc, 2, 13);
    auto ex = basis_vec(4, 1, alg->field());
    auto ey = basis_vec(4, 2, alg->field());
    DForm a = interior(ey, interior(ex, w));
    DForm b = interior(ex, interior(ey, w));
    CHECK(a + b == DForm(mc, 0));
}

TEST_CASE("alternation differential of the zero form is zero") {
    AlgebraPtr alg = builtins::sl2();
    CarrierPtr mc = vf_carrier(alg);
    CHECK(ce_differential(DForm(mc, 1)).is_zero());
}

TEST_CASE("lie derivative on 1-forms follows the direct formula") {
    AlgebraPtr alg = builtins::sl2();
    TorsionAlgebra ta(alg);
    CarrierPtr mc = std::make_shared<const ModuleCarrier>(ta, ModuleCarrier::Kind::vector_fields);
    DForm w = random_dform(mc, 1, 21);
    for (int x = 0; x < 3; ++x) {
        auto ex = basis_vec(3, x, alg->field());
        DForm lw = lie_derivative(ex, w);
        for (int z = 0; z < 3; ++z) {
            auto direct = mc->derivation(x).apply(w.value({z}));
            auto brz = ta.lie_apply(ex, basis_vec(3, z, alg->field()));
            for (int k = 0; k < 3; ++k) {
                Scalar corr = Scalar::zero(alg->field());
                for (int m = 0; m < 3; ++m)
                    corr.add_mul(brz[static_cast<std::size_t>(m)],
                                 w.value({m})[static_cast<std::size_t>(k)]);
                CHECK(lw.value({z})[static_cast<std::size_t>(k)] ==
                      direct[static_cast<std::size_t>(k)] - corr);
            }
        }
    }
}

TEST_CASE("functions carrier over M2 acts through the function algebra") {
    AlgebraPtr alg = builtins::m2q();
    TorsionAlgebra ta(alg);
    ModuleCarrier mc(ta, ModuleCarrier::Kind::functions);
    CHECK(mc.dim() == 4);
    FunctionAlgebra fa(ta);
    // D^M_X phi = X.phi, expressed in the function-algebra basis
    for (int x = 0; x < 4; ++x)
        for (int a = 0; a < 4; ++a) {
            Matrix acted = ta.vf_action(basis_vec(4, x, alg->field()),
                                        fa.basis()[static_cast<std::size_t>(a)]);
            auto coords = fa.coordinates(acted);
            REQUIRE(coords.has_value());
            CHECK(mc.derivation(x).apply(basis_vec(4, a, alg->field())) == *coords);
        }
}
