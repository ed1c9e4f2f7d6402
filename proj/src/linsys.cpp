#include "trop/linsys.hpp"

#include <algorithm>

#include "trop/rank.hpp"

namespace trop {

Scalar eval_form(const Vector& row, const Vector& point) {
    if (row.size() != point.size()) throw ShapeError("eval_form: length mismatch");
    Scalar s = Scalar::neg_inf();
    for (std::size_t j = 0; j < row.size(); ++j) s = add(s, mul(row[j], point[j]));
    return s;
}

SolutionReport is_solution(const LinearSystem& s, const Vector& point) {
    const Matrix& a = s.coefficients;
    if (point.size() != a.cols()) throw ShapeError("is_solution: point length != unknown count");
    SolutionReport r;
    r.point = point;
    r.form_values.reserve(a.rows());
    r.solves = true;
    for (std::size_t i = 1; i <= a.rows(); ++i) {
        Scalar v = eval_form(a.row(i), point);
        if (!is_ghost(v)) r.solves = false;
        r.form_values.push_back(std::move(v));
    }
    bool all_real = std::all_of(point.begin(), point.end(), [](const Scalar& x) { return x.is_real(); });
    bool all_ghost = is_ghost_vector(point);
    r.kind = all_real ? SolutionKind::PureReal : all_ghost ? SolutionKind::Ghost : SolutionKind::Mixed;
    return r;
}

std::optional<SolutionReport> find_pure_real_solution(const LinearSystem& s) {
    const Matrix& a = s.coefficients;
    if (!a.is_square()) throw ShapeError("find_pure_real_solution: system must be square");
    if (a.rows() > kRankCap) throw SizeGuardError("find_pure_real_solution capped at n <= 8");
    if (!is_singular(a)) return std::nullopt;

    // A pure real solution is exactly a real dependence witness for the
    // columns.
    DependenceWitness beta = dependence_witness(transpose(a).row_vectors());
    Vector point = beta.coefficients;

    bool has_gap = std::any_of(point.begin(), point.end(), [](const Scalar& x) { return x.is_neg_inf(); });
    if (has_gap) {
        // Replace -inf coordinates with a real M small enough that every
        // repaired term stays strictly below the finite row values.
        std::optional<Rational> lo, hi;
        auto fold = [&](const Scalar& x) {
            if (x.is_neg_inf()) return;
            if (!lo || x.magnitude() < *lo) lo = x.magnitude();
            if (!hi || x.magnitude() > *hi) hi = x.magnitude();
        };
        for (std::size_t i = 1; i <= a.rows(); ++i)
            for (std::size_t j = 1; j <= a.cols(); ++j) fold(a.at(i, j));
        for (const auto& c : point) fold(c);
        Rational m_bound = *lo;
        for (std::size_t i = 1; i <= a.rows(); ++i) {
            Scalar v = eval_form(a.row(i), point);
            if (!v.is_neg_inf() && v.magnitude() < m_bound) m_bound = v.magnitude();
        }
        Scalar repair = Scalar::real(m_bound - *hi - 1);
        for (auto& c : point)
            if (c.is_neg_inf()) c = repair;
    }

    SolutionReport candidate = is_solution(s, point);
    if (candidate.solves && candidate.kind == SolutionKind::PureReal) return candidate;
    // No pure real point came out; report the witness point itself, which is
    // always a (mixed or ghost) solution.
    return is_solution(s, beta.coefficients);
}

}  // namespace trop
