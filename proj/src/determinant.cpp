#include "trop/determinant.hpp"

#include <algorithm>
#include <numeric>

#include "trop/assignment.hpp"

namespace trop {

namespace {

void require_square(const Matrix& a, const char* op) {
    if (!a.is_square()) throw ShapeError(std::string(op) + ": matrix is not square");
}

Scalar permutation_weight(const Matrix& a, const std::vector<std::size_t>& sigma) {
    Scalar w = Scalar::real(0);
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        w = mul(w, a.at(i + 1, sigma[i]));
        if (w.is_neg_inf()) break;
    }
    return w;
}

Scalar det_brute(const Matrix& a) {
    const std::size_t n = a.rows();
    if (n > kBruteCap) throw SizeGuardError("brute determinant capped at n <= 10");
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    Scalar d = Scalar::neg_inf();
    do {
        d = add(d, permutation_weight(a, sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return d;
}

WeightGrid projected_grid(const Matrix& a) {
    const std::size_t n = a.rows();
    WeightGrid w(n, std::vector<std::optional<Rational>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar& x = a.at(i + 1, j + 1);
            if (!x.is_neg_inf()) w[i][j] = x.magnitude();
        }
    return w;
}

Scalar det_fast(const Matrix& a) {
    const std::size_t n = a.rows();
    if (n == 1) return a.at(1, 1);
    WeightGrid w = projected_grid(a);
    AssignmentResult best = max_assignment(w);
    if (!best.feasible) return Scalar::neg_inf();

    bool ghost_tag = false;
    for (std::size_t i = 0; i < n && !ghost_tag; ++i)
        if (a.at(i + 1, best.row_to_col[i] + 1).has_ghost_tag()) ghost_tag = true;
    if (!ghost_tag) {
        // Forbid each matched cell in turn; a repeat of the optimum proves a
        // second achieving permutation.
        for (std::size_t i = 0; i < n && !ghost_tag; ++i) {
            AssignmentResult alt = max_assignment(w, std::make_pair(i, best.row_to_col[i]));
            if (alt.feasible && alt.value == best.value) ghost_tag = true;
        }
    }
    return ghost_tag ? Scalar::ghost(best.value) : Scalar::real(best.value);
}

}  // namespace

Scalar det(const Matrix& a, DetMethod method) {
    require_square(a, "det");
    const std::size_t n = a.rows();
    if (n == 1) return a.at(1, 1);
    switch (method) {
        case DetMethod::Brute:
            return det_brute(a);
        case DetMethod::Expand:
            return det_expand(a, 1);
        case DetMethod::Fast:
            return det_fast(a);
        case DetMethod::Auto:
            return n <= 6 ? det_brute(a) : det_fast(a);
    }
    return det_brute(a);
}

Scalar det_expand(const Matrix& a, std::size_t i) {
    require_square(a, "det_expand");
    if (a.rows() < 2) throw ShapeError("det_expand: needs n >= 2");
    if (i < 1 || i > a.rows()) throw IndexError("det_expand: row out of range");
    Scalar d = Scalar::neg_inf();
    for (std::size_t j = 1; j <= a.cols(); ++j) {
        const Scalar& aij = a.at(i, j);
        if (aij.is_neg_inf()) continue;
        Matrix m = minor_of(a, i, j);
        Scalar md = m.rows() == 1 ? m.at(1, 1) : det_expand(m, 1);
        d = add(d, mul(aij, md));
    }
    return d;
}

std::vector<AchievingPermutation> achieving_permutations(const Matrix& a) {
    require_square(a, "achieving_permutations");
    const std::size_t n = a.rows();
    if (n > kBruteCap) throw SizeGuardError("achieving_permutations capped at n <= 10");
    Scalar d = det(a, n <= 6 ? DetMethod::Brute : DetMethod::Fast);
    std::vector<AchievingPermutation> out;
    if (d.is_neg_inf()) return out;
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        Scalar w = permutation_weight(a, sigma);
        if (!w.is_neg_inf() && w.magnitude() == d.magnitude()) out.push_back({sigma, w});
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

bool is_singular(const Matrix& a) {
    require_square(a, "is_singular");
    return is_ghost(det(a));
}

Matrix adjoint(const Matrix& a) {
    require_square(a, "adjoint");
    const std::size_t n = a.rows();
    if (n == 1) return Matrix::identity(1);  // empty minor determinant is the unit
    Matrix c(n, n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) c.at(i, j) = det(minor_of(a, j, i));
    return c;
}

std::optional<RankDefectCertificate> rank_defect_certificate(const Matrix& a) {
    require_square(a, "rank_defect_certificate");
    const std::size_t n = a.rows();
    std::vector<std::vector<bool>> support(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) support[i][j] = !a.at(i + 1, j + 1).is_neg_inf();
    MatchingCover mc = max_matching_with_cover(support);
    if (mc.size == n) return std::nullopt;

    RankDefectCertificate cert;
    for (std::size_t i = 0; i < n; ++i)
        if (!mc.row_covered[i]) cert.row_set.push_back(i + 1);
    for (std::size_t j = 0; j < n; ++j)
        if (!mc.col_covered[j]) cert.col_set.push_back(j + 1);
    // The cover has size < n, so uncovered rows + uncovered columns exceed
    // n; trim the column set to exactly n+1-k.
    const std::size_t k = cert.row_set.size();
    cert.col_set.resize(n + 1 - k);
    if (!check_certificate(a, cert)) throw InternalError("rank defect certificate failed validation");
    return cert;
}

bool check_certificate(const Matrix& a, const RankDefectCertificate& cert) {
    if (!a.is_square()) return false;
    const std::size_t n = a.rows();
    const std::size_t k = cert.row_set.size();
    if (k < 1 || k > n || cert.col_set.size() != n + 1 - k) return false;
    for (std::size_t i : cert.row_set)
        for (std::size_t j : cert.col_set) {
            if (i < 1 || i > n || j < 1 || j > n) return false;
            if (!a.at(i, j).is_neg_inf()) return false;
        }
    return true;
}

}  // namespace trop
