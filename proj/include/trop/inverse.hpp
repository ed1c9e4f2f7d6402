#pragma once

#include "trop/determinant.hpp"
#include "trop/matrix.hpp"

namespace trop {

/// Clause-by-clause evidence for membership in the pseudo-unit set: real 0
/// diagonal, ghost-part off-diagonal, nonsingular.
struct PseudoUnitReport {
    bool diagonal_ok = false;
    bool offdiag_ghost_ok = false;
    bool nonsingular_ok = false;
    bool verdict = false;
};

PseudoUnitReport is_pseudo_unit(const Matrix& e);

/// The canonical pseudo-inverse Adj(A)/|A|.  Throws DomainError when A is
/// singular, matching the invertibility theorem's iff.
Matrix pseudo_inverse(const Matrix& a);

/// True iff both A (.) B and B (.) A are pseudo units.
bool verify_pseudo_inverse(const Matrix& a, const Matrix& b);

}  // namespace trop
