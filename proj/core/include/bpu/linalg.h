#pragma once

// Exact dense linear algebra over F_p and Z.
//
// Vectors and matrices hold arbitrary-precision integers; over F_p the
// routines reduce entries into [0, p) and work with machine words.

#include "bpu/galgebra.h"

#include <cstddef>
#include <vector>

namespace bpu {

using Vector = std::vector<Integer>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    /// Matrix whose j-th column is columns[j]; every column must have `rows` entries.
    static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);
    static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    bool is_zero() const;

    /// Reduces every entry into the canonical range of the ring.
    Matrix reduced(const CoefficientRing& ring) const;
    /// Rows of `other` appended below this matrix (same column count).
    Matrix stacked(const Matrix& other) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// A linear map between two graded pieces, in monomial bases.
/// matrix.cols() == source.size(), matrix.rows() == target.size().
struct LinearSlice {
    std::vector<Monomial> source;
    std::vector<Monomial> target;
    Matrix matrix;
    CoefficientRing ring = CoefficientRing::integers();
};

struct RowEchelon {
    Matrix matrix;                     // reduced row-echelon form, zero rows removed
    std::vector<std::size_t> pivots;   // pivot column of each row
};

RowEchelon rref_mod_p(const Matrix& a, std::int64_t p);
std::size_t rank_mod_p(const Matrix& a, std::int64_t p);

/// Basis of {v : a v = 0} over F_p, returned as the rows of a reduced
/// row-echelon matrix.
std::vector<Vector> nullspace_mod_p(const Matrix& a, std::int64_t p);

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank_over_q(const Matrix& a);

/// Z-basis of {v in Z^n : a v = 0}, put in row Hermite normal form (positive
/// pivots, entries above each pivot reduced into [0, pivot)).  The kernel of an
/// integer matrix is saturated, so this is also a basis of the p-local kernel.
std::vector<Vector> integer_kernel(const Matrix& a);

/// Row Hermite normal form of the lattice spanned by `rows`, zero rows removed.
std::vector<Vector> hermite_rows(std::vector<Vector> rows);

/// Integer coordinates of v in a lattice basis given in row Hermite normal
/// form, or nullopt when v is not in the lattice.
std::optional<Vector> lattice_coordinates(const std::vector<Vector>& hnf_rows, const Vector& v);

}  // namespace bpu
