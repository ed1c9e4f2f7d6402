#include "trop/matrix.hpp"

#include <algorithm>

namespace trop {

Matrix::Matrix(std::size_t rows, std::size_t cols, const Scalar& fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
    if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be >= 1");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 1; i <= n; ++i) m.at(i, i) = Scalar::real(0);
    return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty() || rows.front().empty()) throw ShapeError("need at least one row and column");
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw ShapeError("ragged row lengths");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i + 1, j + 1) = rows[i][j];
    }
    return m;
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) throw IndexError("matrix index out of range");
    return data_[(i - 1) * cols_ + (j - 1)];
}

Scalar& Matrix::at(std::size_t i, std::size_t j) {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) throw IndexError("matrix index out of range");
    return data_[(i - 1) * cols_ + (j - 1)];
}

Vector Matrix::row(std::size_t i) const {
    Vector v;
    v.reserve(cols_);
    for (std::size_t j = 1; j <= cols_; ++j) v.push_back(at(i, j));
    return v;
}

Vector Matrix::col(std::size_t j) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 1; i <= rows_; ++i) v.push_back(at(i, j));
    return v;
}

std::vector<Vector> Matrix::row_vectors() const {
    std::vector<Vector> rs;
    rs.reserve(rows_);
    for (std::size_t i = 1; i <= rows_; ++i) rs.push_back(row(i));
    return rs;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("mat_add: shape mismatch");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= a.cols(); ++j) c.at(i, j) = add(a.at(i, j), b.at(i, j));
    return c;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw ShapeError("mat_mul: inner dimensions differ");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= b.cols(); ++j) {
            Scalar s = Scalar::neg_inf();
            for (std::size_t k = 1; k <= a.cols(); ++k) s = add(s, mul(a.at(i, k), b.at(k, j)));
            c.at(i, j) = s;
        }
    return c;
}

Matrix scale(const Scalar& x, const Matrix& a) {
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= a.cols(); ++j) c.at(i, j) = mul(x, a.at(i, j));
    return c;
}

Matrix transpose(const Matrix& a) {
    Matrix c(a.cols(), a.rows());
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= a.cols(); ++j) c.at(j, i) = a.at(i, j);
    return c;
}

Matrix minor_of(const Matrix& a, std::size_t i, std::size_t j) {
    if (a.rows() < 2 || a.cols() < 2) throw ShapeError("minor of a matrix with a single row or column");
    if (i < 1 || i > a.rows() || j < 1 || j > a.cols()) throw IndexError("minor index out of range");
    Matrix c(a.rows() - 1, a.cols() - 1);
    for (std::size_t r = 1, cr = 1; r <= a.rows(); ++r) {
        if (r == i) continue;
        for (std::size_t s = 1, cc = 1; s <= a.cols(); ++s) {
            if (s == j) continue;
            c.at(cr, cc) = a.at(r, s);
            ++cc;
        }
        ++cr;
    }
    return c;
}

Matrix submatrix(const Matrix& a, const std::vector<std::size_t>& row_set,
                 const std::vector<std::size_t>& col_set) {
    if (row_set.empty() || col_set.empty()) throw ShapeError("empty submatrix index set");
    Matrix c(row_set.size(), col_set.size());
    for (std::size_t i = 0; i < row_set.size(); ++i)
        for (std::size_t j = 0; j < col_set.size(); ++j)
            c.at(i + 1, j + 1) = a.at(row_set[i], col_set[j]);
    return c;
}

bool is_ghost_vector(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return is_ghost(x); });
}

bool is_real_matrix(const Matrix& a) {
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= a.cols(); ++j)
            if (a.at(i, j).has_ghost_tag()) return false;
    return true;
}

bool is_ghost_matrix(const Matrix& a) {
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= a.cols(); ++j)
            if (!is_ghost(a.at(i, j))) return false;
    return true;
}

Matrix project_matrix(const Matrix& a) {
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= a.cols(); ++j) c.at(i, j) = project(a.at(i, j));
    return c;
}

Matrix ghostify_matrix(const Matrix& a) {
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= a.cols(); ++j) c.at(i, j) = ghost(a.at(i, j));
    return c;
}

Vector combine(const std::vector<Scalar>& coeffs, const std::vector<Vector>& rows) {
    if (coeffs.size() != rows.size()) throw ShapeError("combine: coefficient count != row count");
    if (rows.empty()) throw ShapeError("combine: no rows");
    std::size_t n = rows.front().size();
    Vector out(n, Scalar::neg_inf());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != n) throw ShapeError("combine: ragged row lengths");
        for (std::size_t j = 0; j < n; ++j) out[j] = add(out[j], mul(coeffs[i], rows[i][j]));
    }
    return out;
}

}  // namespace trop
