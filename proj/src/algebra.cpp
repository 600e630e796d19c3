#include "algeo/algebra.hpp"

#include <set>
#include <sstream>

namespace algeo {

static std::vector<Scalar> densify(const std::vector<StructureTriple> &triples, int n,
                                   FieldSpec field, const char *what) {
    std::vector<Scalar> dense(static_cast<std::size_t>(n) * n * n, Scalar::zero(field));
    std::set<std::tuple<int, int, int>> seen;
    for (const auto &t : triples) {
        if (t.i < 0 || t.i >= n || t.j < 0 || t.j >= n || t.k < 0 || t.k >= n)
            throw ValidationError(std::string(what) + " triple index out of range [0," +
                                  std::to_string(n) + ")");
        if (!seen.insert({t.i, t.j, t.k}).second)
            throw ValidationError(std::string(what) + " has duplicate triple (" +
                                  std::to_string(t.i) + "," + std::to_string(t.j) + "," +
                                  std::to_string(t.k) + ")");
        if (t.c.spec() != field)
            throw MixedFields();
        dense[(static_cast<std::size_t>(t.i) * n + t.j) * n + t.k] = t.c;
    }
    return dense;
}

std::optional<std::tuple<int, int, int>> lie_violation(const std::vector<Scalar> &b, int n,
                                                       FieldSpec field) {
    auto at = [&](int i, int j, int k) -> const Scalar & {
        return b[(static_cast<std::size_t>(i) * n + j) * n + k];
    };
    // antisymmetry
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            for (int k = 0; k < n; ++k)
                if (at(i, j, k) != -at(j, i, k))
                    return std::tuple{i, j, k};
    // Jacobi: [[i,j],k] + [[j,k],i] + [[k,i],j] = 0
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int out = 0; out < n; ++out) {
                    Scalar acc = Scalar::zero(field);
                    for (int m = 0; m < n; ++m) {
                        acc.add_mul(at(i, j, m), at(m, k, out));
                        acc.add_mul(at(j, k, m), at(m, i, out));
                        acc.add_mul(at(k, i, m), at(m, j, out));
                    }
                    if (!acc.is_zero())
                        return std::tuple{i, j, k};
                }
    return std::nullopt;
}

std::shared_ptr<const AlgebraSpec>
AlgebraSpec::create(std::string name, FieldSpec field, int dim,
                    std::vector<std::string> basis_names, const std::vector<StructureTriple> &mu,
                    const std::optional<std::vector<StructureTriple>> &bracket) {
    if (dim <= 0)
        throw ValidationError("algebra dimension must be positive");
    if (basis_names.empty()) {
        basis_names.reserve(dim);
        for (int i = 0; i < dim; ++i)
            basis_names.push_back("e" + std::to_string(i));
    }
    if (static_cast<int>(basis_names.size()) != dim)
        throw ValidationError("basis name count differs from dimension");

    auto spec = std::shared_ptr<AlgebraSpec>(new AlgebraSpec());
    spec->name_ = std::move(name);
    spec->field_ = field;
    spec->dim_ = dim;
    spec->basis_names_ = std::move(basis_names);
    spec->mu_ = densify(mu, dim, field, "mu");
    if (bracket) {
        auto dense = densify(*bracket, dim, field, "bracket");
        if (auto bad = lie_violation(dense, dim, field))
            throw ValidationError("supplied bracket is not a Lie bracket; violation at triple (" +
                                  std::to_string(std::get<0>(*bad)) + "," +
                                  std::to_string(std::get<1>(*bad)) + "," +
                                  std::to_string(std::get<2>(*bad)) + ")");
        spec->bracket_ = std::move(dense);
    }
    return spec;
}

std::vector<Scalar> AlgebraSpec::multiply(const std::vector<Scalar> &x,
                                          const std::vector<Scalar> &y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
        throw DimensionMismatch("element coordinate length differs from algebra dimension");
    std::vector<Scalar> r(dim_, Scalar::zero(field_));
    for (int i = 0; i < dim_; ++i) {
        if (x[i].is_zero())
            continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[j].is_zero())
                continue;
            Scalar xy = x[i];
            xy *= y[j];
            for (int k = 0; k < dim_; ++k) {
                const Scalar &c = mu(i, j, k);
                if (!c.is_zero())
                    r[k].add_mul(xy, c);
            }
        }
    }
    return r;
}

std::string AlgebraSpec::canonical_text() const {
    std::ostringstream os;
    os << "name=" << name_ << ";field=" << field_.str() << ";dim=" << dim_ << ";basis=";
    for (const auto &b : basis_names_)
        os << b << ",";
    os << ";mu=";
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                if (!mu(i, j, k).is_zero())
                    os << i << "," << j << "," << k << ":" << mu(i, j, k).str() << ";";
    if (bracket_) {
        os << ";bracket=";
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                for (int k = 0; k < dim_; ++k)
                    if (!bracket(i, j, k).is_zero())
                        os << i << "," << j << "," << k << ":" << bracket(i, j, k).str() << ";";
    }
    return os.str();
}

} // namespace algeo
