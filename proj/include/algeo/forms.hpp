#pragma once

#include <memory>

#include "algeo/torsion.hpp"

namespace algeo {

/// Coefficient module M for differential forms: the vector fields C with
/// D^M_X u = mu(X,u), or the function algebra A with D^M_X phi = X.phi.
/// The functions carrier requires the action to preserve A (regular torsion
/// algebras); otherwise construction throws CarrierClosure.
class ModuleCarrier {
  public:
    enum class Kind { vector_fields, functions };

    ModuleCarrier(const TorsionAlgebra &ta, Kind kind);

    Kind kind() const { return kind_; }
    const TorsionAlgebra &torsion_algebra() const { return ta_; }
    const FunctionAlgebra &functions() const;
    FieldSpec field() const { return ta_.algebra()->field(); }

    int base_dim() const { return ta_.algebra()->dim(); } // arguments live in C
    int dim() const { return dim_; }                      // values live in M

    /// D^M on basis vector field e_x, as a dim x dim matrix.
    const Matrix &derivation(int x) const { return dmat_[x]; }
    /// D^M_X for an arbitrary X in coordinates.
    Matrix derivation_of(const std::vector<Scalar> &x) const;

    /// Action of the a-th function-algebra basis element on M.
    Matrix function_action(int a) const;

  private:
    TorsionAlgebra ta_;
    Kind kind_;
    int dim_;
    std::shared_ptr<const FunctionAlgebra> fa_;
    std::vector<Matrix> dmat_;
};

using CarrierPtr = std::shared_ptr<const ModuleCarrier>;

/// A not-necessarily-alternating M-valued tensor on C^p; intermediate result
/// of the Hochschild-style form differential.
struct FormTensor {
    CarrierPtr carrier;
    int degree; // number of C arguments
    std::vector<Scalar> values; // index tuple*dim + component

    std::vector<Scalar> value(const std::vector<int> &args) const;
};

/// An alternating M-valued p-form, dense over basis tuples.  The alternating
/// invariant is validated at construction.
class DForm {
  public:
    DForm(CarrierPtr carrier, int degree); // zero form
    static DForm from_values(CarrierPtr carrier, int degree, std::vector<Scalar> values);

    const CarrierPtr &carrier() const { return carrier_; }
    int degree() const { return degree_; }
    const std::vector<Scalar> &values() const { return values_; }
    std::vector<Scalar> value(const std::vector<int> &args) const;

    bool is_zero() const;
    DForm operator+(const DForm &o) const;
    DForm operator-(const DForm &o) const;
    bool operator==(const DForm &o) const;

    FormTensor tensor() const;

    /// First A-multilinearity violation over the function-algebra basis, as
    /// (phi, slot, tuple), or nullopt.
    struct MultilinearityWitness {
        int phi, slot;
        std::size_t tuple;
    };
    std::optional<MultilinearityWitness> a_multilinearity_violation() const;

  private:
    CarrierPtr carrier_;
    int degree_;
    std::vector<Scalar> values_;
};

/// Term-for-term Hochschild-style differential of a p-form (pre-form; not yet
/// alternating).
FormTensor hoch_form_differential(const DForm &w);
FormTensor hoch_form_differential(const FormTensor &w);

/// Unnormalized alternation over argument slots.
FormTensor alternate(const FormTensor &t);

/// Chevalley-Eilenberg quasi-differential: alternation of the Hochschild
/// form differential, no normalization factor.
DForm ce_differential(const DForm &w);

/// K(X,Y) = 2(D^M_X D^M_Y - D^M_Y D^M_X - D^M_{[X,Y]_C}) as an operator on M.
Matrix curvature_K(const ModuleCarrier &carrier, const std::vector<Scalar> &x,
                   const std::vector<Scalar> &y);

/// Interior product i_X; throws DegreeUnderflow on 0-forms.
DForm interior(const std::vector<Scalar> &x, const DForm &w);

/// Lie derivative L_X w = D^M_X(w(..)) - sum_i w(.., [X,Z_i], ..).
DForm lie_derivative(const std::vector<Scalar> &x, const DForm &w);

} // namespace algeo
