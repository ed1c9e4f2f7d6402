#pragma once

#include <optional>

#include "trop/matrix.hpp"

namespace trop {

/// m homogeneous linear forms in n unknowns: f_i(x) = (+)_j a_ij (.) x_j.
struct LinearSystem {
    Matrix coefficients;
};

enum class SolutionKind { PureReal, Mixed, Ghost };

struct SolutionReport {
    Vector point;
    SolutionKind kind = SolutionKind::Mixed;
    std::vector<Scalar> form_values;
    bool solves = false;  // every form value lands in the ghost part
};

Scalar eval_form(const Vector& row, const Vector& point);

/// Evaluates every form at the point and classifies the point (pure real /
/// mixed / ghost coordinates).
SolutionReport is_solution(const LinearSystem& s, const Vector& point);

/// For a square system: nullopt when the coefficient matrix is nonsingular
/// (no pure real solution exists).  When singular, builds a point from a
/// column dependence witness, repairing -inf coordinates with a dominated
/// real constant.  If the repaired point fails to be a pure real solution
/// the witness point itself is returned as a diagnostic (kind != PureReal).
std::optional<SolutionReport> find_pure_real_solution(const LinearSystem& s);

}  // namespace trop
