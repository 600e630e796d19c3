#include "algeo/torsion.hpp"

namespace algeo {

namespace {

std::vector<Scalar> sub(std::vector<Scalar> a, const std::vector<Scalar> &b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}

bool all_zero(const std::vector<Scalar> &v) {
    for (const auto &s : v)
        if (!s.is_zero())
            return false;
    return true;
}

} // namespace

TorsionAlgebra::TorsionAlgebra(AlgebraPtr alg)
    : alg_(alg), mu_(Cochain::mu(alg)),
      lie_(alg->has_bracket() ? Cochain::lie(alg) : split_mu(Cochain::mu(alg)).second),
      torsion_(split_mu(mu_).second - lie_), bracket_supplied_(alg->has_bracket()) {
    if (bracket_supplied_) {
        bracket_is_lie_ = true; // validated at AlgebraSpec load
    } else {
        bracket_is_lie_ =
            !lie_violation(lie_.coefficients(), alg_->dim(), alg_->field()).has_value();
    }
}

Matrix TorsionAlgebra::connection(const std::vector<Scalar> &x) const {
    int n = alg_->dim();
    Matrix m(n, n, alg_->field());
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero())
            continue;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Scalar &c = alg_->mu(i, j, k);
                if (!c.is_zero())
                    m.at(k, j).add_mul(x[i], c);
            }
    }
    return m;
}

std::vector<Scalar> TorsionAlgebra::lie_apply(const std::vector<Scalar> &x,
                                              const std::vector<Scalar> &y) const {
    return lie_.eval({Cochain::element(alg_, x), Cochain::element(alg_, y)}).coefficients();
}

std::vector<Scalar> TorsionAlgebra::associate(const std::vector<Scalar> &x,
                                              const std::vector<Scalar> &y,
                                              const std::vector<Scalar> &z) const {
    auto xy_z = alg_->multiply(alg_->multiply(x, y), z);
    auto x_yz = alg_->multiply(x, alg_->multiply(y, z));
    return sub(std::move(xy_z), x_yz);
}

Matrix TorsionAlgebra::vf_action(const std::vector<Scalar> &x, const Matrix &phi) const {
    Matrix d = connection(x);
    return d * phi - phi * d;
}

TorsionAlgebra::FunctionCheck TorsionAlgebra::is_function(const Matrix &phi) const {
    int n = alg_->dim();
    for (int i = 0; i < n; ++i) {
        std::vector<Scalar> phi_ei(n, Scalar::zero(alg_->field()));
        for (int r = 0; r < n; ++r)
            phi_ei[r] = phi.at(r, i);
        for (int j = 0; j < n; ++j) {
            auto lhs = alg_->multiply(phi_ei, basis_element(j));
            auto rhs = phi.apply(alg_->multiply(basis_element(i), basis_element(j)));
            if (!all_zero(sub(std::move(lhs), rhs)))
                return {false, i, j};
        }
    }
    return {true};
}

TorsionAlgebra::TwoOfThree TorsionAlgebra::lemma_two_of_three(const std::vector<Scalar> &x,
                                                              const std::vector<Scalar> &y,
                                                              const Matrix &phi) const {
    Matrix dx = connection(x);
    Matrix xphi = dx * phi - phi * dx; // X.phi
    auto phi_y = phi.apply(y);

    // r_ii(Y) = D_X(phi Y) - phi D_X Y - (X.phi)Y
    auto r_ii = sub(sub(dx.apply(phi_y), phi.apply(dx.apply(y))), xphi.apply(y));
    // r_iii(Y) = (X.phi)Y + phi[X,Y] - [X, phi Y]
    auto r_iii = xphi.apply(y);
    auto phi_bracket = phi.apply(lie_apply(x, y));
    auto bracket_phi = lie_apply(x, phi_y);
    for (std::size_t i = 0; i < r_iii.size(); ++i) {
        r_iii[i] += phi_bracket[i];
        r_iii[i] -= bracket_phi[i];
    }
    return {std::move(r_ii), std::move(r_iii)};
}

std::vector<Scalar> TorsionAlgebra::basis_element(int i) const {
    std::vector<Scalar> v(alg_->dim(), Scalar::zero(alg_->field()));
    v[i] = Scalar::one(alg_->field());
    return v;
}

FunctionAlgebra::FunctionAlgebra(const TorsionAlgebra &ta)
    : field_(ta.algebra()->field()), n_(ta.algebra()->dim()) {
    const AlgebraPtr &alg = ta.algebra();
    int n = n_;
    // Unknowns: phi_{rc} (phi(e_c) = sum_r phi_{rc} e_r), column index r*n+c.
    // Row per (i,j,k): sum_r phi_{ri} c_{rj}^k - sum_m c_{ij}^m phi_{km} = 0.
    Matrix constraints(n * n * n, n * n, field_);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                int row = (i * n + j) * n + k;
                for (int r = 0; r < n; ++r)
                    constraints.at(row, r * n + i) += alg->mu(r, j, k);
                for (int m = 0; m < n; ++m)
                    constraints.at(row, k * n + m) -= alg->mu(i, j, m);
            }
    KernelBasis kb = kernel_basis(constraints);
    for (const auto &v : kb.vectors) {
        Matrix phi(n, n, field_);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                phi.at(r, c) = v[r * n + c];
        basis_.push_back(std::move(phi));
        basis_flat_.push_back(v);
    }
    int dim = dimension();
    mult_table_.resize(static_cast<std::size_t>(dim) * dim);
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            Matrix prod = basis_[a] * basis_[b];
            std::vector<Scalar> flat(static_cast<std::size_t>(n) * n, Scalar::zero(field_));
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    flat[r * n + c] = prod.at(r, c);
            ExpandResult ex = expand_in_basis(basis_flat_, flat, field_);
            if (!ex.coordinates)
                throw ValidationError("function algebra is not closed under composition "
                                      "(basis product " +
                                      std::to_string(a) + " o " + std::to_string(b) +
                                      " not in span)");
            mult_table_[static_cast<std::size_t>(a) * dim + b] = *ex.coordinates;
        }
}

const std::vector<Scalar> &FunctionAlgebra::table(int a, int b) const {
    return mult_table_[static_cast<std::size_t>(a) * dimension() + b];
}

std::optional<std::vector<Scalar>> FunctionAlgebra::coordinates(const Matrix &phi) const {
    std::vector<Scalar> flat(static_cast<std::size_t>(n_) * n_, Scalar::zero(field_));
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c)
            flat[r * n_ + c] = phi.at(r, c);
    ExpandResult ex = expand_in_basis(basis_flat_, flat, field_);
    return ex.coordinates;
}

namespace {

std::vector<Scalar> torsion_eval(const TorsionAlgebra &ta, const std::vector<Scalar> &x,
                                 const std::vector<Scalar> &y) {
    const AlgebraPtr &alg = ta.algebra();
    return ta.torsion()
        .eval({Cochain::element(alg, x), Cochain::element(alg, y)})
        .coefficients();
}

} // namespace

std::optional<RegularityWitness> regularity_violation(const TorsionAlgebra &ta,
                                                      const FunctionAlgebra &fa) {
    int n = ta.algebra()->dim();
    for (int p = 0; p < fa.dimension(); ++p) {
        const Matrix &phi = fa.basis()[p];
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                auto ex = ta.basis_element(x), ey = ta.basis_element(y);
                auto t_xy = torsion_eval(ta, ex, ey);
                auto phi_t = phi.apply(t_xy);
                if (!all_zero(sub(torsion_eval(ta, phi.apply(ex), ey), phi_t)))
                    return RegularityWitness{"torsion-first-slot", p, x, y, -1};
                if (!all_zero(sub(torsion_eval(ta, ex, phi.apply(ey)), phi_t)))
                    return RegularityWitness{"torsion-second-slot", p, x, y, -1};
                for (int z = 0; z < n; ++z) {
                    auto ez = ta.basis_element(z);
                    auto phi_a = phi.apply(ta.associate(ex, ey, ez));
                    if (!all_zero(sub(ta.associate(phi.apply(ex), ey, ez), phi_a)))
                        return RegularityWitness{"associator-first-slot", p, x, y, z};
                    if (!all_zero(sub(ta.associate(ex, phi.apply(ey), ez), phi_a)))
                        return RegularityWitness{"associator-second-slot", p, x, y, z};
                }
            }
    }
    return std::nullopt;
}

std::vector<ClaimResult> theorem1_suite(const TorsionAlgebra &ta, const FunctionAlgebra &fa) {
    int n = ta.algebra()->dim();
    int dim = fa.dimension();
    std::vector<ClaimResult> out;
    auto record = [&](const std::string &claim, bool pass, const std::string &witness) {
        out.push_back({claim, pass, pass ? "" : witness});
    };
    auto tag = [](std::initializer_list<int> idx) {
        std::string s;
        for (int v : idx)
            s += std::to_string(v) + " ";
        return s;
    };

    // (1) X.phi is a function
    {
        bool ok = true;
        std::string w;
        for (int x = 0; x < n && ok; ++x)
            for (int p = 0; p < dim && ok; ++p) {
                auto act = ta.vf_action(ta.basis_element(x), fa.basis()[p]);
                auto chk = ta.is_function(act);
                if (!chk.ok) {
                    ok = false;
                    w = "X=" + std::to_string(x) + " phi=" + std::to_string(p) +
                        " violating pair (" + std::to_string(chk.x) + "," +
                        std::to_string(chk.y) + ")";
                }
            }
        record("action-stays-in-function-algebra", ok, w);
    }
    // (2) Leibniz on A: X.(phi psi) = (X.phi)psi + phi(X.psi)
    {
        bool ok = true;
        std::string w;
        for (int x = 0; x < n && ok; ++x)
            for (int a = 0; a < dim && ok; ++a)
                for (int b = 0; b < dim && ok; ++b) {
                    auto ex = ta.basis_element(x);
                    Matrix lhs = ta.vf_action(ex, fa.basis()[a] * fa.basis()[b]);
                    Matrix rhs = ta.vf_action(ex, fa.basis()[a]) * fa.basis()[b] +
                                 fa.basis()[a] * ta.vf_action(ex, fa.basis()[b]);
                    if (!(lhs == rhs)) {
                        ok = false;
                        w = tag({x, a, b});
                    }
                }
        record("action-is-derivation", ok, w);
    }
    // (3) associator A-linear in first two slots
    {
        bool ok = true;
        std::string w;
        for (int p = 0; p < dim && ok; ++p)
            for (int x = 0; x < n && ok; ++x)
                for (int y = 0; y < n && ok; ++y)
                    for (int z = 0; z < n && ok; ++z) {
                        const Matrix &phi = fa.basis()[p];
                        auto ex = ta.basis_element(x), ey = ta.basis_element(y),
                             ez = ta.basis_element(z);
                        auto phi_a = phi.apply(ta.associate(ex, ey, ez));
                        if (!all_zero(sub(ta.associate(phi.apply(ex), ey, ez), phi_a)) ||
                            !all_zero(sub(ta.associate(ex, phi.apply(ey), ez), phi_a))) {
                            ok = false;
                            w = tag({p, x, y, z});
                        }
                    }
        record("associator-function-linear", ok, w);
    }
    // (4) [X, phi Y] = phi[X,Y] + (X.phi)Y
    {
        bool ok = true;
        std::string w;
        for (int p = 0; p < dim && ok; ++p)
            for (int x = 0; x < n && ok; ++x)
                for (int y = 0; y < n && ok; ++y) {
                    const Matrix &phi = fa.basis()[p];
                    auto ex = ta.basis_element(x), ey = ta.basis_element(y);
                    auto lhs = ta.lie_apply(ex, phi.apply(ey));
                    auto rhs = phi.apply(ta.lie_apply(ex, ey));
                    auto act = ta.vf_action(ex, phi).apply(ey);
                    for (std::size_t i = 0; i < rhs.size(); ++i)
                        rhs[i] += act[i];
                    if (!all_zero(sub(std::move(lhs), rhs))) {
                        ok = false;
                        w = tag({p, x, y});
                    }
                }
        record("bracket-derivation-law", ok, w);
    }
    // (5) D_X(phi Y) = (X.phi)Y + phi D_X Y
    {
        bool ok = true;
        std::string w;
        for (int p = 0; p < dim && ok; ++p)
            for (int x = 0; x < n && ok; ++x)
                for (int y = 0; y < n && ok; ++y) {
                    const Matrix &phi = fa.basis()[p];
                    auto ex = ta.basis_element(x), ey = ta.basis_element(y);
                    Matrix dx = ta.connection(ex);
                    auto lhs = dx.apply(phi.apply(ey));
                    auto rhs = ta.vf_action(ex, phi).apply(ey);
                    auto t = phi.apply(dx.apply(ey));
                    for (std::size_t i = 0; i < rhs.size(); ++i)
                        rhs[i] += t[i];
                    if (!all_zero(sub(std::move(lhs), rhs))) {
                        ok = false;
                        w = tag({p, x, y});
                    }
                }
        record("connection-derivation-law", ok, w);
    }
    // (6) torsion A-bilinear
    {
        bool ok = true;
        std::string w;
        for (int p = 0; p < dim && ok; ++p)
            for (int x = 0; x < n && ok; ++x)
                for (int y = 0; y < n && ok; ++y) {
                    const Matrix &phi = fa.basis()[p];
                    auto ex = ta.basis_element(x), ey = ta.basis_element(y);
                    auto phi_t = phi.apply(torsion_eval(ta, ex, ey));
                    if (!all_zero(sub(torsion_eval(ta, phi.apply(ex), ey), phi_t)) ||
                        !all_zero(sub(torsion_eval(ta, ex, phi.apply(ey)), phi_t))) {
                        ok = false;
                        w = tag({p, x, y});
                    }
                }
        record("torsion-function-bilinear", ok, w);
    }
    return out;
}

KernelBasis left_nucleus(const AlgebraPtr &alg) {
    int n = alg->dim();
    FieldSpec f = alg->field();
    // Unknown c (n coords); rows per (i,j,k): sum_m c_m [(e_m e_i)e_j - e_m(e_i e_j)]_k = 0.
    Matrix constraints(n * n * n, n, f);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                int row = (i * n + j) * n + k;
                for (int m = 0; m < n; ++m) {
                    Scalar acc = Scalar::zero(f);
                    for (int s = 0; s < n; ++s) {
                        acc.add_mul(alg->mu(m, i, s), alg->mu(s, j, k));
                        Scalar t = alg->mu(i, j, s);
                        t *= alg->mu(m, s, k);
                        acc -= t;
                    }
                    constraints.at(row, m) += acc;
                }
            }
    return kernel_basis(constraints);
}

} // namespace algeo
