#pragma once

#include <optional>
#include <vector>

#include "qosp/scalars.hpp"

namespace qosp {

/// Dense matrix of exact scalars. Representation matrices are square, but
/// the class also carries rectangular bases (e.g. nullspaces as columns).
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(FieldPtr field, int rows, int cols);

    static ExactMatrix identity(const FieldPtr& field, int n);
    static ExactMatrix zero(const FieldPtr& field, int n) { return ExactMatrix(field, n, n); }

    const FieldPtr& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    /// Dimension of a square matrix.
    int dim() const;

    const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }

    friend ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y);
    friend ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y);
    friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y);
    friend ExactMatrix operator*(const Scalar& c, const ExactMatrix& x);
    ExactMatrix operator-() const;
    friend bool operator==(const ExactMatrix& x, const ExactMatrix& y);
    friend bool operator!=(const ExactMatrix& x, const ExactMatrix& y) { return !(x == y); }

    ExactMatrix transpose() const;
    ExactMatrix pow(long n) const;  // negative n inverts first

    bool is_zero() const;

    /// c such that the matrix is exactly c * identity, if it is scalar.
    std::optional<Scalar> as_scalar() const;

    /// Gauss-Jordan inverse; arithmetic error when singular.
    ExactMatrix inverse() const;

    int rank() const;

    /// Basis of the right nullspace, returned as the columns of a
    /// cols x nullity matrix (empty matrix when the kernel is trivial).
    ExactMatrix nullspace() const;

    /// Solve self * X = rhs exactly. Requires full column rank and a
    /// consistent system; arithmetic error otherwise.
    ExactMatrix solve(const ExactMatrix& rhs) const;

    /// Columns i of `cols` for i in [first, last).
    ExactMatrix column_range(int first, int last) const;

private:
    FieldPtr field_;
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

/// Incremental row-echelon basis of vectors over a scalar field; used for
/// exact span computations (the Burnside irreducibility test).
class SpanBasis {
public:
    SpanBasis(FieldPtr field, size_t width);

    /// Reduce v against the basis; if a nonzero remainder survives, insert
    /// it (normalized) and return true.
    bool insert(std::vector<Scalar> v);

    size_t size() const { return rows_.size(); }

private:
    FieldPtr field_;
    size_t width_;
    std::vector<std::vector<Scalar>> rows_;  // rows with unit leading pivots
    std::vector<size_t> pivots_;             // pivot column per row
};

}  // namespace qosp
