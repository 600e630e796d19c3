#pragma once

#include <optional>
#include <string>

#include "algeo/hochschild.hpp"

namespace algeo {

class FunctionAlgebra;

/// A torsion algebra (C, D, [,]_C): mu read as a connection D, a Lie bracket
/// (supplied, or defaulted to the commutator mu_-), and the cached torsion
/// T = mu_- - [,]_C.
class TorsionAlgebra {
  public:
    explicit TorsionAlgebra(AlgebraPtr alg);

    const AlgebraPtr &algebra() const { return alg_; }
    const Cochain &mu() const { return mu_; }
    const Cochain &lie_bracket() const { return lie_; }
    const Cochain &torsion() const { return torsion_; }
    bool bracket_supplied() const { return bracket_supplied_; }
    /// Whether the bracket in use satisfies the Jacobi identity.  A supplied
    /// non-Lie bracket is rejected at AlgebraSpec load; a defaulted commutator
    /// may fail Jacobi and is only flagged here.
    bool bracket_is_lie() const { return bracket_is_lie_; }

    /// Matrix of D_X = mu(x, .).
    Matrix connection(const std::vector<Scalar> &x) const;
    /// Bracket [x, y]_C in coordinates.
    std::vector<Scalar> lie_apply(const std::vector<Scalar> &x,
                                  const std::vector<Scalar> &y) const;
    /// alpha(x,y,z) = (xy)z - x(yz) in coordinates.
    std::vector<Scalar> associate(const std::vector<Scalar> &x, const std::vector<Scalar> &y,
                                  const std::vector<Scalar> &z) const;

    /// X.phi = [D_X, phi].
    Matrix vf_action(const std::vector<Scalar> &x, const Matrix &phi) const;

    /// Direct membership test for the function condition
    /// D_{phi(X)}Y = phi(D_X Y); witness is the first violating basis pair.
    struct FunctionCheck {
        bool ok;
        int x = -1, y = -1; // violating basis pair when !ok
    };
    FunctionCheck is_function(const Matrix &phi) const;

    /// The two braces of the two-of-three decomposition, evaluated at Y.
    struct TwoOfThree {
        std::vector<Scalar> residual_ii;  // D_X(phi Y) - phi D_X Y - (X.phi)Y
        std::vector<Scalar> residual_iii; // (X.phi)Y + phi[X,Y] - [X, phi Y]
    };
    TwoOfThree lemma_two_of_three(const std::vector<Scalar> &x, const std::vector<Scalar> &y,
                                  const Matrix &phi) const;

    std::vector<Scalar> basis_element(int i) const;

  private:
    AlgebraPtr alg_;
    Cochain mu_;
    Cochain lie_;
    Cochain torsion_;
    bool bracket_supplied_;
    bool bracket_is_lie_;
};

/// The M-function algebra A = {phi : D_{phi(X)}Y = phi(D_X Y)}, computed as
/// a kernel and closed under composition.
class FunctionAlgebra {
  public:
    explicit FunctionAlgebra(const TorsionAlgebra &ta);

    int dimension() const { return static_cast<int>(basis_.size()); }
    const std::vector<Matrix> &basis() const { return basis_; }
    /// Coordinates of basis[a] o basis[b] in the basis.
    const std::vector<Scalar> &table(int a, int b) const;

    /// Coordinates of an endomorphism in the basis, if it lies in A.
    std::optional<std::vector<Scalar>> coordinates(const Matrix &phi) const;

    FieldSpec field() const { return field_; }

  private:
    FieldSpec field_;
    int n_;
    std::vector<Matrix> basis_;
    std::vector<std::vector<Scalar>> mult_table_; // index a*dim+b
    std::vector<std::vector<Scalar>> basis_flat_; // column-major n*n vectors
};

struct RegularityWitness {
    std::string condition; // which bilinearity failed
    int phi, x, y, z;      // basis indices (z = -1 for torsion conditions)
};

/// Regularity: torsion and associator A-bilinear in the first two slots.
std::optional<RegularityWitness> regularity_violation(const TorsionAlgebra &ta,
                                                      const FunctionAlgebra &fa);
inline bool is_regular(const TorsionAlgebra &ta, const FunctionAlgebra &fa) {
    return !regularity_violation(ta, fa).has_value();
}

struct ClaimResult {
    std::string claim;
    bool pass;
    std::string witness;
};

/// The six derivation-law claims checked on all basis tuples.
std::vector<ClaimResult> theorem1_suite(const TorsionAlgebra &ta, const FunctionAlgebra &fa);

/// Left nucleus {c : (cX)Y = c(XY)} as a kernel basis; cross-check oracle for
/// the function algebra of unital algebras.
KernelBasis left_nucleus(const AlgebraPtr &alg);

} // namespace algeo
