#include "trop/rank.hpp"

#include <algorithm>
#include <numeric>

namespace trop {

namespace {

// k-subsets of {1..n} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(k);
    std::iota(cur.begin(), cur.end(), 1);
    for (;;) {
        out.push_back(cur);
        // advance
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<std::size_t> complement_of(const std::vector<std::size_t>& s, std::size_t n) {
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t v = 1; v <= n; ++v) {
        if (p < s.size() && s[p] == v) ++p;
        else out.push_back(v);
    }
    return out;
}

void require_uniform(const std::vector<Vector>& vectors) {
    if (vectors.empty() || vectors.front().empty()) throw ShapeError("need at least one nonempty vector");
    for (const auto& v : vectors)
        if (v.size() != vectors.front().size()) throw ShapeError("vector length mismatch");
}

std::optional<MinorLocation> best_minor(const Matrix& a) {
    if (a.rows() > kRankCap || a.cols() > kRankCap)
        throw SizeGuardError("rank machinery capped at 8 rows/columns");
    for (std::size_t k = std::min(a.rows(), a.cols()); k >= 1; --k) {
        for (const auto& rs : subsets_of_size(a.rows(), k))
            for (const auto& cs : subsets_of_size(a.cols(), k))
                if (!is_singular(submatrix(a, rs, cs))) return MinorLocation{rs, cs};
    }
    return std::nullopt;
}

// Case I of the singular-square construction for one fixed achieving
// permutation: returns a validated witness or nullopt.
std::optional<DependenceWitness> case_one_witness(const Matrix& a,
                                                  const std::vector<std::size_t>& sigma) {
    const std::size_t n = a.rows();
    const std::vector<Vector> rows = a.row_vectors();

    // Permute columns so sigma becomes the identity: new column j is old
    // column sigma(j).  The witness attaches to rows, so this is free.
    Matrix a1(n, n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) a1.at(i, j) = a.at(i, sigma[j - 1]);

    for (std::size_t s = 1; s <= n; ++s) {
        for (const auto& subset : subsets_of_size(n, s)) {
            Matrix sub = submatrix(a1, subset, subset);
            Scalar dsub = det(sub);
            if (!is_ghost(dsub)) continue;
            Scalar diag = Scalar::real(0);
            for (std::size_t i = 1; i <= s; ++i) diag = mul(diag, sub.at(i, i));
            if (!(realize(dsub) == realize(diag))) continue;

            // Renumber the submatrix to the upper left (same permutation on
            // rows and columns), then read off the projected first-column
            // minor determinants.
            std::vector<std::size_t> order = subset;
            for (std::size_t v : complement_of(subset, n)) order.push_back(v);
            Matrix a2 = submatrix(a1, order, order);
            DependenceWitness w;
            w.coefficients.assign(n, Scalar::neg_inf());
            for (std::size_t i = 1; i <= n; ++i)
                w.coefficients[order[i - 1] - 1] = project(det(minor_of(a2, i, 1)));
            if (validate_witness(rows, w)) return w;
        }
    }
    return std::nullopt;
}

}  // namespace

bool validate_witness(const std::vector<Vector>& rows, const DependenceWitness& w) {
    if (w.coefficients.size() != rows.size()) return false;
    bool any_real = false;
    for (const auto& c : w.coefficients) {
        if (c.has_ghost_tag()) return false;
        if (c.is_real()) any_real = true;
    }
    if (!any_real) return false;
    return is_ghost_vector(combine(w.coefficients, rows));
}

bool is_dependent(const std::vector<Vector>& vectors) {
    require_uniform(vectors);
    const std::size_t m = vectors.size(), n = vectors.front().size();
    if (m > n) return true;  // any k > n vectors are dependent
    return rank(Matrix::from_rows(vectors)) < m;
}

DependenceWitness square_witness(const Matrix& a) {
    if (!a.is_square()) throw ShapeError("square_witness: matrix is not square");
    if (!is_singular(a)) throw DomainError("square_witness: matrix is nonsingular");
    const std::size_t n = a.rows();
    const std::vector<Vector> rows = a.row_vectors();

    if (n == 1) {
        DependenceWitness w{{Scalar::real(0)}};
        if (!validate_witness(rows, w)) throw InternalError("square_witness: 1x1 validation failed");
        return w;
    }

    Scalar d = det(a);
    if (!d.is_neg_inf()) {
        // Achieving permutations come out in lexicographic order; the least
        // one is the canonical normalization, the rest are fallbacks.
        for (const auto& ap : achieving_permutations(a))
            if (auto w = case_one_witness(a, ap.sigma)) return *w;
        throw InternalError("square_witness: no achieving permutation produced a valid witness");
    }

    // det = -inf: restrict the certificate rows to their finite columns and
    // recurse on the (strictly wider-than-tall) restriction.
    RankDefectCertificate cert = *rank_defect_certificate(a);
    std::vector<std::size_t> finite_cols;
    for (std::size_t j = 1; j <= n; ++j) {
        bool finite = false;
        for (std::size_t i : cert.row_set)
            if (!a.at(i, j).is_neg_inf()) {
                finite = true;
                break;
            }
        if (finite) finite_cols.push_back(j);
    }

    DependenceWitness w;
    w.coefficients.assign(n, Scalar::neg_inf());
    if (finite_cols.empty()) {
        // A fully -inf row is a ghost vector on its own.
        w.coefficients[cert.row_set.front() - 1] = Scalar::real(0);
    } else {
        std::vector<Vector> restricted;
        for (std::size_t i : cert.row_set) {
            Vector r;
            for (std::size_t j : finite_cols) r.push_back(a.at(i, j));
            restricted.push_back(std::move(r));
        }
        DependenceWitness inner = dependence_witness(restricted);
        for (std::size_t idx = 0; idx < cert.row_set.size(); ++idx)
            w.coefficients[cert.row_set[idx] - 1] = inner.coefficients[idx];
    }
    if (!validate_witness(rows, w)) throw InternalError("square_witness: rank-defect case validation failed");
    return w;
}

DependenceWitness dependence_witness(const std::vector<Vector>& vectors) {
    require_uniform(vectors);
    if (!is_dependent(vectors)) throw DomainError("dependence_witness: vectors are tropically independent");
    const std::size_t m = vectors.size(), n = vectors.front().size();

    if (m == n) return square_witness(Matrix::from_rows(vectors));

    if (m > n) {
        // n+1 rows with a duplicated column form a singular square matrix;
        // its witness transfers and the leftover rows pad with -inf.
        std::vector<Vector> square_rows;
        for (std::size_t i = 0; i < n + 1; ++i) {
            Vector r = vectors[i];
            r.push_back(vectors[i][0]);
            square_rows.push_back(std::move(r));
        }
        DependenceWitness inner = square_witness(Matrix::from_rows(square_rows));
        DependenceWitness w;
        w.coefficients = inner.coefficients;
        w.coefficients.resize(m, Scalar::neg_inf());
        if (!validate_witness(vectors, w))
            throw InternalError("dependence_witness: duplicated-column construction failed validation");
        return w;
    }

    // m < n: recurse on the matrix without one column and glue two such
    // witnesses through the 2x2 matrix of column sums.  A sub-witness can
    // already cover the dropped column, and the glue matrix is not always
    // singular, so every candidate is validation-guarded and the column
    // pairs are tried in turn.
    auto column_sum = [&](const std::vector<Scalar>& coeffs, std::size_t col) {
        Scalar s = Scalar::neg_inf();
        for (std::size_t i = 0; i < m; ++i) s = add(s, mul(coeffs[i], vectors[i][col]));
        return s;
    };
    auto without_column = [&](std::size_t col) {
        std::vector<Vector> out(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (j != col) out[i].push_back(vectors[i][j]);
        return out;
    };

    std::vector<std::optional<DependenceWitness>> dropped(n);
    auto witness_without = [&](std::size_t col) -> const DependenceWitness& {
        if (!dropped[col]) dropped[col] = dependence_witness(without_column(col));
        return *dropped[col];
    };

    for (std::size_t q = n; q-- > 0;) {
        // a sub-witness whose combination ghosts the dropped column too
        const DependenceWitness& wq = witness_without(q);
        if (validate_witness(vectors, wq)) return wq;
        for (std::size_t p = 0; p < q; ++p) {
            const DependenceWitness& wp = witness_without(p);
            Matrix b(2, 2);
            b.at(1, 1) = column_sum(wq.coefficients, p);
            b.at(1, 2) = column_sum(wq.coefficients, q);
            b.at(2, 1) = column_sum(wp.coefficients, p);
            b.at(2, 2) = column_sum(wp.coefficients, q);
            if (!is_singular(b)) continue;
            DependenceWitness mu = square_witness(b);
            DependenceWitness w;
            w.coefficients.reserve(m);
            for (std::size_t i = 0; i < m; ++i)
                w.coefficients.push_back(project(add(mul(mu.coefficients[0], wq.coefficients[i]),
                                                     mul(mu.coefficients[1], wp.coefficients[i]))));
            if (validate_witness(vectors, w)) return w;
        }
    }

    // last resort: a square witness of some column restriction may already
    // cover the remaining columns
    for (const auto& cs : subsets_of_size(n, m)) {
        std::vector<Vector> restricted(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t c : cs) restricted[i].push_back(vectors[i][c - 1]);
        Matrix sq = Matrix::from_rows(restricted);
        if (!is_singular(sq)) continue;
        DependenceWitness w = square_witness(sq);
        if (validate_witness(vectors, w)) return w;
    }
    throw InternalError("dependence_witness: column-splitting construction failed validation");
}

std::size_t rank(const Matrix& a) {
    auto loc = best_minor(a);
    return loc ? loc->size() : 0;
}

std::optional<MinorLocation> max_nonsingular_minor(const Matrix& a) { return best_minor(a); }

std::size_t rank_dss(const Matrix& a) {
    if (!is_real_matrix(a)) throw DomainError("rank_dss: matrix has ghost entries");
    return rank(a);
}

}  // namespace trop
