#include "trop/corpus.hpp"

#include "trop/determinant.hpp"

namespace trop {

std::uint64_t Corpus::uniform(std::uint64_t bound) { return rng_() % bound; }

Rational Corpus::magnitude(int lo, int hi) {
    return Rational(lo + static_cast<long long>(uniform(static_cast<std::uint64_t>(hi - lo + 1))));
}

Scalar Corpus::scalar(int neg_inf_pct, int ghost_pct, int lo, int hi) {
    std::uint64_t roll = uniform(100);
    if (roll < static_cast<std::uint64_t>(neg_inf_pct)) return Scalar::neg_inf();
    Rational m = magnitude(lo, hi);
    if (roll < static_cast<std::uint64_t>(neg_inf_pct + ghost_pct)) return Scalar::ghost(std::move(m));
    return Scalar::real(std::move(m));
}

Matrix Corpus::matrix(std::size_t rows, std::size_t cols, int neg_inf_pct, int ghost_pct, int lo, int hi) {
    Matrix a(rows, cols);
    for (std::size_t i = 1; i <= rows; ++i)
        for (std::size_t j = 1; j <= cols; ++j) a.at(i, j) = scalar(neg_inf_pct, ghost_pct, lo, hi);
    return a;
}

Matrix Corpus::real_matrix(std::size_t rows, std::size_t cols, int lo, int hi) {
    return matrix(rows, cols, 0, 0, lo, hi);
}

Matrix Corpus::singular_real_matrix(std::size_t n, int lo, int hi) {
    if (n < 2) throw DomainError("singular_real_matrix: a finite real 1x1 matrix is never singular");
    std::vector<Vector> rows;
    std::vector<Scalar> coeffs;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        rows.push_back(real_matrix(1, n, lo, hi).row(1));
        coeffs.push_back(Scalar::real(magnitude(lo, hi)));
    }
    Vector combined = combine(coeffs, rows);
    for (auto& x : combined) x = project(x);
    rows.push_back(std::move(combined));
    // Fisher-Yates over the rows so the dependent row lands anywhere.
    for (std::size_t i = rows.size(); i > 1; --i)
        std::swap(rows[i - 1], rows[uniform(i)]);
    return Matrix::from_rows(rows);
}

Matrix Corpus::nonsingular_real_matrix(std::size_t n, int lo, int hi) {
    for (;;) {
        Matrix a = real_matrix(n, n, lo, hi);
        if (!is_singular(a)) return a;
    }
}

Matrix Corpus::zero_bounded_matrix(std::size_t n, ColumnRule rule) {
    for (;;) {
        Matrix a(n, n);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j) {
                std::uint64_t roll = uniform(100);
                if (roll < 10) a.at(i, j) = Scalar::neg_inf();
                else if (roll < 40) a.at(i, j) = Scalar::real(magnitude(-9, 0));
                else if (roll < 55) a.at(i, j) = Scalar::ghost(magnitude(-9, -1));
                else if (roll < 80) a.at(i, j) = Scalar::real(0);
                else a.at(i, j) = Scalar::ghost(0);
            }
        for (std::size_t j = 1; j <= n; ++j) {
            if (rule == ColumnRule::GhostZero || uniform(2) == 0) {
                a.at(1 + uniform(n), j) = Scalar::ghost(0);
            } else {
                std::size_t r1 = 1 + uniform(n);
                std::size_t r2 = 1 + uniform(n - 1);
                if (r2 >= r1) ++r2;
                a.at(r1, j) = Scalar::real(0);
                a.at(r2, j) = Scalar::real(0);
            }
        }
        if (!det(a).is_neg_inf()) return a;
    }
}

}  // namespace trop
