#pragma once

#include <optional>
#include <vector>

#include "algeo/field.hpp"

namespace algeo {

/// Dense row-major matrix over one field.
class Matrix {
  public:
    Matrix(int rows, int cols, FieldSpec spec);
    static Matrix identity(int n, FieldSpec spec);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    FieldSpec spec() const { return spec_; }

    Scalar &at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Scalar &at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }

    Matrix operator*(const Matrix &o) const;
    Matrix operator+(const Matrix &o) const;
    Matrix operator-(const Matrix &o) const;
    bool operator==(const Matrix &o) const;
    bool is_zero() const;

    std::vector<Scalar> apply(const std::vector<Scalar> &v) const;

  private:
    int rows_, cols_;
    FieldSpec spec_;
    std::vector<Scalar> e_;
};

struct RrefResult {
    Matrix reduced;
    int rank;
    std::vector<int> pivot_cols;
};

struct KernelBasis {
    std::vector<std::vector<Scalar>> vectors; // each of length cols, canonical (1 in its free column)
    int rank;
};

/// Reduced row echelon form with deterministic leftmost-pivot, topmost-row
/// elimination. Exact arithmetic needs no pivoting heuristics.
RrefResult rref(const Matrix &m);

/// Canonical kernel basis, ordered by free-column index.
KernelBasis kernel_basis(const Matrix &m);

struct ExpandResult {
    std::optional<std::vector<Scalar>> coordinates; // present iff target in span
    std::vector<Scalar> residual;                   // nonzero witness when not in span
};

/// Expand target in the span of the given (independent) vectors.
ExpandResult expand_in_basis(const std::vector<std::vector<Scalar>> &basis,
                             const std::vector<Scalar> &target, FieldSpec spec);

} // namespace algeo
