#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "algeo/field.hpp"

namespace algeo {

struct StructureTriple {
    int i, j, k;
    Scalar c;
};

/// A finite-dimensional algebra (C, mu) over an exact field, given by
/// structure constants mu(e_i, e_j) = sum_k c_{ij}^k e_k, with an optional
/// independent Lie bracket.
class AlgebraSpec {
  public:
    static std::shared_ptr<const AlgebraSpec>
    create(std::string name, FieldSpec field, int dim, std::vector<std::string> basis_names,
           const std::vector<StructureTriple> &mu,
           const std::optional<std::vector<StructureTriple>> &bracket);

    const std::string &name() const { return name_; }
    FieldSpec field() const { return field_; }
    int dim() const { return dim_; }
    const std::vector<std::string> &basis_names() const { return basis_names_; }

    const Scalar &mu(int i, int j, int k) const {
        return mu_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
    }
    bool has_bracket() const { return bracket_.has_value(); }
    /// Supplied bracket constant; only valid when has_bracket().
    const Scalar &bracket(int i, int j, int k) const {
        return (*bracket_)[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
    }

    /// mu(x, y) in coordinates.
    std::vector<Scalar> multiply(const std::vector<Scalar> &x, const std::vector<Scalar> &y) const;

    /// Canonical serialization used for input digests (stable key order).
    std::string canonical_text() const;

  private:
    AlgebraSpec() = default;
    std::string name_;
    FieldSpec field_;
    int dim_ = 0;
    std::vector<std::string> basis_names_;
    std::vector<Scalar> mu_;                      // dense (i*n+j)*n+k
    std::optional<std::vector<Scalar>> bracket_;  // dense, validated Lie
};

using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;

/// Checks antisymmetry and the Jacobi identity of dense structure constants;
/// returns a violating (i,j,k) triple, or nullopt if the bracket is Lie.
std::optional<std::tuple<int, int, int>> lie_violation(const std::vector<Scalar> &b, int n,
                                                       FieldSpec field);

} // namespace algeo
