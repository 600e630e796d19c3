#pragma once

#include <map>

#include "algeo/cochain.hpp"
#include "algeo/linalg.hpp"

namespace algeo {

/// An element of the truncated graded space  W = (+)_{p <= pmax} C^p(V),
/// stored as homogeneous cochain pieces over a dim-V carrier module.
struct GradedCochain {
    std::map<int, Cochain> pieces; // degree -> nonzero homogeneous piece

    bool is_zero() const { return pieces.empty(); }
};

/// The finite truncation of the graded pre-Lie algebra of cochains of a
/// module V, with D = comp and bracket the graded commutator.  Zero torsion
/// by construction; comp results sticking out of the truncation are flagged.
class GerstenhaberCarrier {
  public:
    GerstenhaberCarrier(int v_dim, int max_arity, FieldSpec field = FieldSpec::rationals());

    int v_dim() const { return v_; }
    int max_degree() const { return pmax_; }
    /// Total dimension of the truncated space.
    int total_dim() const { return total_; }

    const AlgebraPtr &module() const { return mod_; }

    struct CompResult {
        GradedCochain value; // pieces within the truncation
        bool truncated;      // a nonzero piece fell outside
    };

    CompResult comp(const GradedCochain &x, const GradedCochain &y) const;
    CompResult graded_commutator(const GradedCochain &x, const GradedCochain &y) const;
    /// Torsion of (W, comp, graded commutator): the graded skew part of comp
    /// minus the bracket, within the truncation.
    CompResult torsion(const GradedCochain &x, const GradedCochain &y) const;

    /// Enumerated basis of W in degree order.
    struct BasisRef {
        int degree;
        std::size_t tuple;
        int out;
    };
    const std::vector<BasisRef> &basis() const { return basis_; }
    GradedCochain basis_element(std::size_t idx) const;

    /// Matrix of left comp-multiplication by a degree-0 element f (degree
    /// preserving, hence a genuine endomorphism of W).
    Matrix left_mult_matrix(const GradedCochain &f) const;

    /// Function condition D_{f o x} y = f o (x o y), i.e. associativity of
    /// comp at (f, x, y), tested over basis pairs that stay within the
    /// truncation.  Returns the first violating pair, or nullopt.
    struct FunctionWitness {
        std::size_t x, y; // basis indices of the violating pair
    };
    std::optional<FunctionWitness> function_violation(const GradedCochain &f) const;

    /// Flat coordinates of a graded element in the enumerated basis.
    std::vector<Scalar> flatten(const GradedCochain &x) const;

  private:
    int v_;
    int pmax_; // max piece degree = max_arity - 1
    int total_;
    AlgebraPtr mod_;
    std::vector<BasisRef> basis_;
    std::vector<std::size_t> degree_offset_; // index of first basis element per degree
};

} // namespace algeo
