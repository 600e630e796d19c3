#include "algeo/gerstenhaber.hpp"

namespace algeo {

namespace {

void add_piece(std::map<int, Cochain> &pieces, const Cochain &c) {
    if (c.is_zero())
        return;
    auto it = pieces.find(c.degree());
    if (it == pieces.end())
        pieces.emplace(c.degree(), c);
    else {
        it->second = it->second + c;
        if (it->second.is_zero())
            pieces.erase(it);
    }
}

} // namespace

GerstenhaberCarrier::GerstenhaberCarrier(int v_dim, int max_arity, FieldSpec field)
    : v_(v_dim), pmax_(max_arity - 1) {
    if (v_dim < 1 || max_arity < 2)
        throw ValidationError("truncated carrier needs v_dim >= 1, max_arity >= 2");
    mod_ = AlgebraSpec::create("V" + std::to_string(v_dim), field, v_dim, {}, {}, std::nullopt);
    total_ = 0;
    for (int p = 0; p <= pmax_; ++p) {
        degree_offset_.push_back(basis_.size());
        std::size_t tuples = 1;
        for (int a = 0; a < p + 1; ++a)
            tuples *= static_cast<std::size_t>(v_);
        for (std::size_t t = 0; t < tuples; ++t)
            for (int out = 0; out < v_; ++out)
                basis_.push_back({p, t, out});
        total_ = static_cast<int>(basis_.size());
    }
}

GerstenhaberCarrier::CompResult GerstenhaberCarrier::comp(const GradedCochain &x,
                                                          const GradedCochain &y) const {
    CompResult res{{}, false};
    for (const auto &[px, cx] : x.pieces)
        for (const auto &[py, cy] : y.pieces) {
            Cochain c = algeo::comp(cx, cy);
            if (c.is_zero())
                continue;
            if (c.degree() > pmax_)
                res.truncated = true;
            else
                add_piece(res.value.pieces, c);
        }
    return res;
}

GerstenhaberCarrier::CompResult
GerstenhaberCarrier::graded_commutator(const GradedCochain &x, const GradedCochain &y) const {
    CompResult res{{}, false};
    for (const auto &[px, cx] : x.pieces)
        for (const auto &[py, cy] : y.pieces) {
            Cochain c = bracket(cx, cy);
            if (c.is_zero())
                continue;
            if (c.degree() > pmax_)
                res.truncated = true;
            else
                add_piece(res.value.pieces, c);
        }
    return res;
}

GerstenhaberCarrier::CompResult GerstenhaberCarrier::torsion(const GradedCochain &x,
                                                             const GradedCochain &y) const {
    // D_-(x,y) = x o y - (-1)^{pq} y o x, piecewise; minus the bracket.
    CompResult skew{{}, false};
    for (const auto &[px, cx] : x.pieces)
        for (const auto &[py, cy] : y.pieces) {
            Cochain xy = algeo::comp(cx, cy);
            Cochain yx = algeo::comp(cy, cx);
            Cochain c = ((px & 1) && (py & 1)) ? xy + yx : xy - yx;
            if (c.is_zero())
                continue;
            if (c.degree() > pmax_)
                skew.truncated = true;
            else
                add_piece(skew.value.pieces, c);
        }
    CompResult br = graded_commutator(x, y);
    CompResult res{{}, skew.truncated || br.truncated};
    for (const auto &[d, c] : skew.value.pieces)
        add_piece(res.value.pieces, c);
    for (const auto &[d, c] : br.value.pieces)
        add_piece(res.value.pieces, -c);
    return res;
}

GradedCochain GerstenhaberCarrier::basis_element(std::size_t idx) const {
    const BasisRef &b = basis_.at(idx);
    GradedCochain g;
    g.pieces.emplace(b.degree, Cochain::basis_cochain(mod_, b.degree, b.tuple, b.out));
    return g;
}

std::vector<Scalar> GerstenhaberCarrier::flatten(const GradedCochain &x) const {
    std::vector<Scalar> flat(static_cast<std::size_t>(total_), Scalar::zero(mod_->field()));
    for (const auto &[p, c] : x.pieces) {
        if (p < 0 || p > pmax_)
            throw Truncated("graded element sticks out of the truncation");
        std::size_t off = degree_offset_[p];
        std::size_t tuples = c.tuple_count();
        for (std::size_t t = 0; t < tuples; ++t)
            for (int out = 0; out < v_; ++out)
                flat[off + t * v_ + out] = c.coef(t, out);
    }
    return flat;
}

Matrix GerstenhaberCarrier::left_mult_matrix(const GradedCochain &f) const {
    for (const auto &[p, c] : f.pieces)
        if (p != 0)
            throw Truncated("left multiplication is an endomorphism of the truncation only "
                            "for degree-0 elements");
    Matrix m(total_, total_, mod_->field());
    for (int col = 0; col < total_; ++col) {
        CompResult r = comp(f, basis_element(static_cast<std::size_t>(col)));
        auto flat = flatten(r.value);
        for (int row = 0; row < total_; ++row)
            m.at(row, col) = flat[row];
    }
    return m;
}

std::optional<GerstenhaberCarrier::FunctionWitness>
GerstenhaberCarrier::function_violation(const GradedCochain &f) const {
    int fdeg = 0;
    for (const auto &[p, c] : f.pieces)
        fdeg = std::max(fdeg, p);
    for (std::size_t xi = 0; xi < basis_.size(); ++xi)
        for (std::size_t yi = 0; yi < basis_.size(); ++yi) {
            // only pairs whose comps stay within the truncation
            if (fdeg + basis_[xi].degree + basis_[yi].degree > pmax_)
                continue;
            GradedCochain x = basis_element(xi), y = basis_element(yi);
            CompResult fx = comp(f, x);
            CompResult xy = comp(x, y);
            if (fx.truncated || xy.truncated)
                continue;
            CompResult lhs = comp(fx.value, y);
            CompResult rhs = comp(f, xy.value);
            if (lhs.truncated || rhs.truncated)
                continue;
            auto l = flatten(lhs.value), r = flatten(rhs.value);
            if (l != r)
                return FunctionWitness{xi, yi};
        }
    return std::nullopt;
}

} // namespace algeo
