#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace albert {

using Vec = std::vector<Scalar>;
/// Sparse linear functional: (index, coefficient) pairs, indices strictly increasing.
using SparseRow = std::vector<std::pair<int, Scalar>>;

Vec vec_zero(const Field& f, int n);
bool vec_is_zero(const Vec& v);
Scalar vec_dot(const Vec& a, const Vec& b);
/// a += c * b
void vec_add_scaled(Vec& a, const Scalar& c, const Vec& b);
Vec vec_scaled(const Vec& a, const Scalar& c);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
/// Over Q: rescale to coprime integer entries with positive leading sign.
/// Over F_p: rescale so the leading entry is 1.
void vec_normalize_primitive(Vec& v);

/// Dense row-major matrix over one exact field.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0), fld_(&Field::rationals()) {}
    ExactMatrix(const Field& f, int rows, int cols)
        : rows_(rows), cols_(cols), fld_(&f), a_(static_cast<size_t>(rows) * cols, Scalar(f)) {}

    static ExactMatrix identity(const Field& f, int n);
    static ExactMatrix from_rows(const Field& f, const std::vector<Vec>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return *fld_; }

    Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix scaled(const Scalar& c) const;
    ExactMatrix transpose() const;
    bool operator==(const ExactMatrix& o) const;
    bool is_zero() const;

    Vec apply(const Vec& v) const;   // matrix * column vector
    Vec row(int i) const;
    Vec flatten() const { return a_; }

private:
    int rows_, cols_;
    const Field* fld_;
    std::vector<Scalar> a_;
};

/// Exact Gaussian elimination. Returns rank; if rref_out/pivots_out are given
/// they receive the reduced row echelon form and its pivot columns.
int matrix_rank(const ExactMatrix& m);
std::vector<Vec> nullspace(const ExactMatrix& m);
std::optional<Vec> solve_linear(const ExactMatrix& m, const Vec& b);

/// Inverse of a square matrix; throws std::domain_error if singular.
ExactMatrix matrix_inverse(const ExactMatrix& m);

/// Row span with coordinate tracking: vectors live in a fixed ambient
/// dimension, and coordinates are reported with respect to the vectors as
/// they were added (not the internal echelon rows).
class BasisSolver {
public:
    BasisSolver(const Field& f, int ambient_dim);

    /// Returns true if v enlarged the span (v is then recorded as a basis vector).
    bool add(const Vec& v);
    int rank() const { return static_cast<int>(echelon_.size()); }
    int ambient_dim() const { return dim_; }
    bool contains(const Vec& v) const;
    /// Coordinates of v in the added basis; std::nullopt if v is outside the span.
    std::optional<Vec> coordinates(const Vec& v) const;
    const std::vector<Vec>& basis() const { return basis_; }

private:
    const Field* fld_;
    int dim_;
    std::vector<Vec> basis_;            // vectors as added, independent
    std::vector<Vec> echelon_;          // reduced rows, pivot entry 1
    std::vector<Vec> combo_;            // echelon_[r] = sum combo_[r][j] * basis_[j]
    std::vector<int> pivot_col_;
    // Reduce v in place, accumulating the basis coordinates used; returns true
    // if a nonzero residual remains.
    bool reduce(Vec& v, Vec* coords) const;
};

/// Incremental kernel computation: starts as the full space of dimension dim
/// and shrinks as linear constraints arrive. Exact over any Field; cost per
/// constraint is O(nnz * d + dim * d) where d is the current kernel dimension.
class NullspaceTracker {
public:
    NullspaceTracker(const Field& f, int dim);
    void add_constraint(const SparseRow& r);
    void add_constraint_dense(const Vec& r);
    int dim() const { return dim_; }
    int kernel_dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }

private:
    const Field* fld_;
    int dim_;
    std::vector<Vec> basis_;
    void shrink(const Vec& coeffs);
};

}  // namespace albert
