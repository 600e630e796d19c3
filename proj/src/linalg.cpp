#include "algeo/linalg.hpp"

#include <algorithm>

namespace algeo {

Matrix::Matrix(int rows, int cols, FieldSpec spec)
    : rows_(rows), cols_(cols), spec_(spec),
      e_(static_cast<std::size_t>(rows) * cols, Scalar::zero(spec)) {}

Matrix Matrix::identity(int n, FieldSpec spec) {
    Matrix m(n, n, spec);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = Scalar::one(spec);
    return m;
}

Matrix Matrix::operator*(const Matrix &o) const {
    if (cols_ != o.rows_)
        throw DimensionMismatch("matrix product shape mismatch");
    Matrix r(rows_, o.cols_, spec_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar &a = at(i, k);
            if (a.is_zero())
                continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j).add_mul(a, o.at(k, j));
        }
    return r;
}

Matrix Matrix::operator+(const Matrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix sum shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] += o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix difference shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] -= o.e_[i];
    return r;
}

bool Matrix::operator==(const Matrix &o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Scalar &s) { return s.is_zero(); });
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar> &v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw DimensionMismatch("matrix-vector shape mismatch");
    std::vector<Scalar> r(rows_, Scalar::zero(spec_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r[i].add_mul(at(i, j), v[j]);
    return r;
}

RrefResult rref(const Matrix &m) {
    Matrix a = m;
    int rank = 0;
    std::vector<int> pivots;
    for (int col = 0; col < a.cols() && rank < a.rows(); ++col) {
        int pr = -1;
        for (int r = rank; r < a.rows(); ++r)
            if (!a.at(r, col).is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0)
            continue;
        if (pr != rank)
            for (int c = 0; c < a.cols(); ++c)
                std::swap(a.at(pr, c), a.at(rank, c));
        Scalar piv_inv = a.at(rank, col).inv();
        for (int c = col; c < a.cols(); ++c)
            a.at(rank, c) *= piv_inv;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == rank || a.at(r, col).is_zero())
                continue;
            Scalar factor = a.at(r, col);
            for (int c = col; c < a.cols(); ++c) {
                Scalar t = factor;
                t *= a.at(rank, c);
                a.at(r, c) -= t;
            }
        }
        pivots.push_back(col);
        ++rank;
    }
    return {std::move(a), rank, std::move(pivots)};
}

KernelBasis kernel_basis(const Matrix &m) {
    RrefResult rr = rref(m);
    const Matrix &a = rr.reduced;
    FieldSpec spec = m.spec();
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : rr.pivot_cols)
        is_pivot[c] = true;

    KernelBasis kb;
    kb.rank = rr.rank;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Scalar> v(m.cols(), Scalar::zero(spec));
        v[free] = Scalar::one(spec);
        for (int r = 0; r < rr.rank; ++r)
            v[rr.pivot_cols[r]] = -a.at(r, free);
        kb.vectors.push_back(std::move(v));
    }
    return kb;
}

ExpandResult expand_in_basis(const std::vector<std::vector<Scalar>> &basis,
                             const std::vector<Scalar> &target, FieldSpec spec) {
    std::size_t dim = target.size();
    for (const auto &b : basis)
        if (b.size() != dim)
            throw DimensionMismatch("basis vector length differs from target");

    // Solve [B | t] by elimination; columns = basis coefficients.
    int rows = static_cast<int>(dim);
    int cols = static_cast<int>(basis.size()) + 1;
    Matrix aug(rows, cols, spec);
    for (int r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < basis.size(); ++c)
            aug.at(r, static_cast<int>(c)) = basis[c][r];
        aug.at(r, cols - 1) = target[r];
    }
    RrefResult rr = rref(aug);
    bool in_span = true;
    for (int c : rr.pivot_cols)
        if (c == cols - 1)
            in_span = false;

    ExpandResult res;
    if (in_span) {
        std::vector<Scalar> coords(basis.size(), Scalar::zero(spec));
        for (int r = 0; r < rr.rank; ++r)
            coords[rr.pivot_cols[r]] = rr.reduced.at(r, cols - 1);
        res.residual.assign(dim, Scalar::zero(spec));
        res.coordinates = std::move(coords);
    } else {
        // Residual witness: target minus its projection, i.e. target with the
        // best partial combination removed. Solve for coords ignoring the
        // inconsistent rows, then report target - sum coords_i basis_i.
        std::vector<Scalar> coords(basis.size(), Scalar::zero(spec));
        for (int r = 0; r < rr.rank; ++r)
            if (rr.pivot_cols[r] < cols - 1)
                coords[rr.pivot_cols[r]] = rr.reduced.at(r, cols - 1);
        std::vector<Scalar> resid = target;
        for (std::size_t c = 0; c < basis.size(); ++c)
            if (!coords[c].is_zero())
                for (std::size_t r = 0; r < dim; ++r) {
                    Scalar t = coords[c];
                    t *= basis[c][r];
                    resid[r] -= t;
                }
        res.residual = std::move(resid);
    }
    return res;
}

} // namespace algeo
