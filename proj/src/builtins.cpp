#include "algeo/builtins.hpp"

#include <array>
#include <map>
#include <random>

namespace algeo {
namespace builtins {

namespace {

StructureTriple t(int i, int j, int k, Scalar c) { return {i, j, k, std::move(c)}; }

std::vector<StructureTriple> sl2_bracket_triples(const FieldSpec &f) {
    // basis h, e, f: [h,e]=2e, [h,f]=-2f, [e,f]=h
    auto two = Scalar::from_int(f, 2);
    auto mtwo = Scalar::from_int(f, -2);
    auto one = Scalar::one(f);
    auto mone = Scalar::from_int(f, -1);
    return {
        t(0, 1, 1, two),  t(1, 0, 1, mtwo), // [h,e]=2e
        t(0, 2, 2, mtwo), t(2, 0, 2, two),  // [h,f]=-2f
        t(1, 2, 0, one),  t(2, 1, 0, mone), // [e,f]=h
    };
}

} // namespace

AlgebraPtr m2q() {
    static AlgebraPtr cached = [] {
        FieldSpec f = FieldSpec::rationals();
        // basis e11, e12, e21, e22; e_{ab} e_{cd} = delta_{bc} e_{ad}
        std::vector<StructureTriple> mu;
        auto idx = [](int a, int b) { return a * 2 + b; };
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int d = 0; d < 2; ++d)
                    mu.push_back(t(idx(a, b), idx(b, d), idx(a, d), Scalar::one(f)));
        return AlgebraSpec::create("m2q", f, 4, {"e11", "e12", "e21", "e22"}, mu, std::nullopt);
    }();
    return cached;
}

AlgebraPtr qz3() {
    static AlgebraPtr cached = [] {
        FieldSpec f = FieldSpec::rationals();
        std::vector<StructureTriple> mu;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                mu.push_back(t(i, j, (i + j) % 3, Scalar::one(f)));
        return AlgebraSpec::create("qz3", f, 3, {"g0", "g1", "g2"}, mu, std::nullopt);
    }();
    return cached;
}

AlgebraPtr sl2() {
    static AlgebraPtr cached = [] {
        FieldSpec f = FieldSpec::rationals();
        return AlgebraSpec::create("sl2", f, 3, {"h", "e", "f"}, sl2_bracket_triples(f), std::nullopt);
    }();
    return cached;
}

AlgebraPtr sl2half() {
    static AlgebraPtr cached = [] {
        FieldSpec f = FieldSpec::rationals();
        auto br = sl2_bracket_triples(f);
        std::vector<StructureTriple> mu = br;
        Scalar half = Scalar::from_string(f, "1/2");
        for (auto &tr : mu)
            tr.c *= half;
        return AlgebraSpec::create("sl2half", f, 3, {"h", "e", "f"}, mu, br);
    }();
    return cached;
}

AlgebraPtr octonions() {
    static AlgebraPtr cached = [] {
        FieldSpec fs = FieldSpec::rationals();
        // Cayley-Dickson tower R -> C -> H -> O:
        // (a,b)(c,d) = (ac - d*b, da + bc*), (a,b)* = (a*, -b).
        // Elements at level L are dense vectors of 2^L rationals.
        struct CD {
            static std::vector<mpq_class> conj(const std::vector<mpq_class> &x) {
                std::vector<mpq_class> r = x;
                for (std::size_t i = 1; i < r.size(); ++i)
                    r[i] = -r[i];
                return r;
            }
            static std::vector<mpq_class> mul(const std::vector<mpq_class> &x,
                                              const std::vector<mpq_class> &y) {
                std::size_t n = x.size();
                if (n == 1)
                    return {x[0] * y[0]};
                std::size_t h = n / 2;
                std::vector<mpq_class> a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
                std::vector<mpq_class> c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
                auto ac = mul(a, c), db = mul(conj(d), b);
                auto da = mul(d, a), bc = mul(b, conj(c));
                std::vector<mpq_class> r(n);
                for (std::size_t i = 0; i < h; ++i) {
                    r[i] = ac[i] - db[i];
                    r[h + i] = da[i] + bc[i];
                }
                return r;
            }
        };
        std::vector<StructureTriple> mu;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                std::vector<mpq_class> x(8, mpq_class(0)), y(8, mpq_class(0));
                x[i] = 1;
                y[j] = 1;
                auto prod = CD::mul(x, y);
                for (int k = 0; k < 8; ++k)
                    if (prod[k] != 0)
                        mu.push_back(t(i, j, k, Scalar::from_string(fs, prod[k].get_str())));
            }
        return AlgebraSpec::create("octonions", fs, 8,
                                   {"1", "i", "j", "k", "l", "li", "lj", "lk"}, mu, std::nullopt);
    }();
    return cached;
}

AlgebraPtr zero_algebra(int dim) {
    static std::map<int, AlgebraPtr> cached;
    AlgebraPtr &slot = cached[dim];
    if (!slot)
        slot = AlgebraSpec::create("zero" + std::to_string(dim), FieldSpec::rationals(), dim,
                                   {}, {}, std::nullopt);
    return slot;
}

AlgebraPtr poisson_sl2() {
    static AlgebraPtr cached = [] {
        FieldSpec f = FieldSpec::rationals();
        return AlgebraSpec::create("poisson-sl2", f, 3, {"h", "e", "f"}, {},
                                   sl2_bracket_triples(f));
    }();
    return cached;
}

AlgebraPtr random_fp(std::uint64_t p, int dim, std::uint64_t seed) {
    FieldSpec f = FieldSpec::prime(p);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    std::vector<StructureTriple> mu;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                std::uint64_t v = dist(rng);
                if (v != 0)
                    mu.push_back(t(i, j, k, Scalar::from_int(f, static_cast<long long>(v))));
            }
    return AlgebraSpec::create("random-f" + std::to_string(p) + "-" + std::to_string(dim) +
                                   "-" + std::to_string(seed),
                               f, dim, {}, mu, std::nullopt);
}

AlgebraPtr by_name(const std::string &name) {
    if (name == "m2q")
        return m2q();
    if (name == "qz3")
        return qz3();
    if (name == "sl2")
        return sl2();
    if (name == "sl2half")
        return sl2half();
    if (name == "octonions")
        return octonions();
    if (name == "zero3")
        return zero_algebra(3);
    if (name == "poisson-sl2")
        return poisson_sl2();
    return nullptr;
}

std::vector<std::string> names() {
    return {"m2q", "qz3", "sl2", "sl2half", "octonions", "zero3", "poisson-sl2"};
}

} // namespace builtins
} // namespace algeo
