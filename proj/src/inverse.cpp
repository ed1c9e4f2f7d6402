#include "trop/inverse.hpp"

namespace trop {

PseudoUnitReport is_pseudo_unit(const Matrix& e) {
    if (!e.is_square()) throw ShapeError("is_pseudo_unit: matrix is not square");
    PseudoUnitReport r;
    r.diagonal_ok = true;
    r.offdiag_ghost_ok = true;
    const Scalar unit = Scalar::real(0);
    for (std::size_t i = 1; i <= e.rows(); ++i)
        for (std::size_t j = 1; j <= e.cols(); ++j) {
            if (i == j) {
                if (!(e.at(i, j) == unit)) r.diagonal_ok = false;
            } else if (!is_ghost(e.at(i, j))) {
                r.offdiag_ghost_ok = false;
            }
        }
    r.nonsingular_ok = !is_singular(e);
    r.verdict = r.diagonal_ok && r.offdiag_ghost_ok && r.nonsingular_ok;
    return r;
}

Matrix pseudo_inverse(const Matrix& a) {
    if (!a.is_square()) throw ShapeError("pseudo_inverse: matrix is not square");
    Scalar d = det(a);
    if (is_ghost(d)) throw DomainError("pseudo_inverse: matrix is tropically singular");
    Matrix adj = adjoint(a);
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= a.cols(); ++j) out.at(i, j) = div(adj.at(i, j), d);
    return out;
}

bool verify_pseudo_inverse(const Matrix& a, const Matrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw ShapeError("verify_pseudo_inverse: matrices must be square of equal size");
    return is_pseudo_unit(mat_mul(a, b)).verdict && is_pseudo_unit(mat_mul(b, a)).verdict;
}

}  // namespace trop
