#include "algeo/hochschild.hpp"

namespace algeo {

QuasiComplex::QuasiComplex(AlgebraPtr alg)
    : alg_(alg), mu_(Cochain::mu(alg)), identity_(Cochain::identity(alg)),
      alpha_(comp(mu_, mu_)) {}

Cochain QuasiComplex::differential(const Cochain &f) const { return bracket(mu_, f); }

Cochain QuasiComplex::classical_differential(const Cochain &f) const {
    Cochain d = differential(f);
    return (f.degree() & 1) ? -d : d;
}

bool QuasiComplex::is_associative() const { return alpha_.is_zero(); }

bool QuasiComplex::is_pre_lie() const { return alt_cochain(alpha_).is_zero(); }

bool QuasiComplex::bianchi_check() const { return differential(alpha_).is_zero(); }

bool QuasiComplex::square_formula_check(const Cochain &s) const {
    return differential(differential(s)) == bracket(alpha_, s);
}

Matrix QuasiComplex::left_regular(const std::vector<Scalar> &x) const {
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

std::pair<Matrix, Matrix> QuasiComplex::rep_curvatures(const std::vector<Scalar> &x,
                                                       const std::vector<Scalar> &y) const {
    Matrix lx = left_regular(x), ly = left_regular(y);
    Matrix lxy = left_regular(alg_->multiply(x, y));
    Matrix lyx = left_regular(alg_->multiply(y, x));
    Matrix sigma = lx * ly - lxy;
    Matrix kappa = lx * ly - ly * lx - (lxy - lyx);
    return {std::move(sigma), std::move(kappa)};
}

CoherenceReport coherence_order(const QuasiComplex &qc, int max_order, int max_degree) {
    if (max_order < 1 || max_degree < 0)
        throw ValidationError("coherence_order needs max_order >= 1, max_degree >= 0");
    CoherenceReport rep{max_degree, max_order, std::nullopt, std::nullopt};
    const AlgebraPtr &alg = qc.algebra();
    int n = alg->dim();

    // Per basis cochain: smallest k with d^k f = 0 (capped). The order for the
    // tested range is the max over basis cochains; one survivor past
    // max_order settles "none found".
    int needed = 1;
    for (int deg = 0; deg <= max_degree; ++deg) {
        std::size_t tuples = 1;
        for (int a = 0; a < deg + 1; ++a)
            tuples *= static_cast<std::size_t>(n);
        for (std::size_t t = 0; t < tuples; ++t)
            for (int out = 0; out < n; ++out) {
                Cochain f = Cochain::basis_cochain(alg, deg, t, out);
                int k = 0;
                while (k < max_order && !f.is_zero()) {
                    f = qc.differential(f);
                    ++k;
                }
                if (!f.is_zero()) {
                    rep.witness = CoherenceWitness{deg, t, out, max_order};
                    return rep; // d^max_order f != 0: no order exists in range
                }
                needed = std::max(needed, k);
            }
    }
    rep.order = needed;
    return rep;
}

} // namespace algeo
