#pragma once

#include <cstddef>
#include <vector>

#include "trop/scalar.hpp"

namespace trop {

using Vector = std::vector<Scalar>;

/// Dense rectangular matrix over the extended tropical semiring.
/// All public indices are 1-based.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const Scalar& fill = Scalar::neg_inf());

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols);
    static Matrix from_rows(const std::vector<Vector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Scalar& at(std::size_t i, std::size_t j) const;
    Scalar& at(std::size_t i, std::size_t j);

    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;
    std::vector<Vector> row_vectors() const;

    bool operator==(const Matrix& o) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

/// Entrywise (+).  Throws ShapeError unless shapes agree.
Matrix mat_add(const Matrix& a, const Matrix& b);

/// Tropical row-by-column product.  Throws ShapeError unless inner
/// dimensions agree.
Matrix mat_mul(const Matrix& a, const Matrix& b);

/// Entrywise scalar product (two-sided, since the semiring is commutative).
Matrix scale(const Scalar& x, const Matrix& a);

Matrix transpose(const Matrix& a);

/// Deletes row i and column j.  Requires rows, cols >= 2.
Matrix minor_of(const Matrix& a, std::size_t i, std::size_t j);

/// Extracts the rows and columns listed (1-based, strictly increasing).
Matrix submatrix(const Matrix& a, const std::vector<std::size_t>& row_set,
                 const std::vector<std::size_t>& col_set);

bool is_ghost_vector(const Vector& v);
bool is_real_matrix(const Matrix& a);
bool is_ghost_matrix(const Matrix& a);

/// Entrywise max-plus projection (ghost tags stripped, result real-tagged).
Matrix project_matrix(const Matrix& a);

/// Entrywise ghost map.
Matrix ghostify_matrix(const Matrix& a);

/// (+)-combination of rows: coeffs[i] (.) rows[i], summed entrywise.
/// Throws ShapeError on length mismatches.
Vector combine(const std::vector<Scalar>& coeffs, const std::vector<Vector>& rows);

}  // namespace trop
