#pragma once

#include <optional>
#include <string>

#include "algeo/cochain.hpp"
#include "algeo/linalg.hpp"

namespace algeo {

/// The Hochschild quasi-complex of a possibly non-associative algebra:
/// quasi-differential d = [mu, .], the associator/curvature alpha = mu o mu,
/// and the left-regular quasi-representation curvatures.
class QuasiComplex {
  public:
    explicit QuasiComplex(AlgebraPtr alg);

    const AlgebraPtr &algebra() const { return alg_; }
    const Cochain &mu() const { return mu_; }
    const Cochain &identity_cochain() const { return identity_; }
    const Cochain &curvature() const { return alpha_; }

    /// d f = [mu, f]; raises degree by one.
    Cochain differential(const Cochain &f) const;
    /// (-1)^p d f — the classical Hochschild/Gerstenhaber sign convention.
    Cochain classical_differential(const Cochain &f) const;

    bool is_associative() const;
    bool is_pre_lie() const;

    bool bianchi_check() const;                       // d alpha = 0
    bool square_formula_check(const Cochain &s) const; // d d s = [alpha, s]

    /// Matrix of y -> mu(x, y).
    Matrix left_regular(const std::vector<Scalar> &x) const;

    /// sigma = L(x)L(y) - L(xy);  kappa = [L(x), L(y)] - L(mu_-(x,y)).
    std::pair<Matrix, Matrix> rep_curvatures(const std::vector<Scalar> &x,
                                             const std::vector<Scalar> &y) const;

  private:
    AlgebraPtr alg_;
    Cochain mu_;
    Cochain identity_;
    Cochain alpha_;
};

struct CoherenceWitness {
    int degree;         // degree of the basis cochain
    std::size_t tuple;  // basis cochain index
    int out;
    int surviving_order; // d^surviving_order of it is nonzero
};

struct CoherenceReport {
    int max_degree_tested;
    int max_order_tested;
    std::optional<int> order; // smallest N with d^N = 0 on tested degrees
    std::optional<CoherenceWitness> witness;
};

/// Checks d^N f = 0 for all basis cochains f of degree <= max_degree,
/// N <= max_order; reports the smallest passing N or none.
CoherenceReport coherence_order(const QuasiComplex &qc, int max_order, int max_degree);

} // namespace algeo
