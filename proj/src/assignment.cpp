#include "trop/assignment.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "trop/errors.hpp"

namespace trop {

namespace {

using boost::multiprecision::cpp_int;

cpp_int lcm_of(const cpp_int& a, const cpp_int& b) { return boost::multiprecision::lcm(a, b); }

}  // namespace

AssignmentResult max_assignment(const WeightGrid& w,
                                std::optional<std::pair<std::size_t, std::size_t>> forbidden) {
    const std::size_t n = w.size();
    if (n == 0) throw ShapeError("empty assignment grid");
    for (const auto& row : w)
        if (row.size() != n) throw ShapeError("assignment grid must be square");

    auto is_forbidden = [&](std::size_t i, std::size_t j) {
        if (!w[i][j].has_value()) return true;
        return forbidden && forbidden->first == i && forbidden->second == j;
    };

    // Common integer grid: scale every finite weight by the lcm of the
    // denominators so the Hungarian potentials stay integral.
    cpp_int scale = 1;
    for (const auto& row : w)
        for (const auto& cell : row)
            if (cell) scale = lcm_of(scale, boost::multiprecision::denominator(*cell));

    std::vector<std::vector<cpp_int>> val(n, std::vector<cpp_int>(n, 0));
    cpp_int max_abs = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (w[i][j]) {
                val[i][j] = boost::multiprecision::numerator(*w[i][j]) *
                            (scale / boost::multiprecision::denominator(*w[i][j]));
                cpp_int a = abs(val[i][j]);
                if (a > max_abs) max_abs = a;
            }

    // Forbidden cells cost enough that any assignment avoiding them beats
    // any assignment using one; a chosen forbidden cell therefore proves
    // infeasibility.
    const cpp_int big = 2 * cpp_int(n) * max_abs + 1;
    const cpp_int inf = big * cpp_int(4 * n + 8);
    auto cost = [&](std::size_t i, std::size_t j) -> cpp_int {
        return is_forbidden(i, j) ? big : -val[i][j];
    };

    // Jonker-Volgenant style shortest augmenting paths with potentials.
    std::vector<cpp_int> u(n + 1, 0), v(n + 1, 0);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<cpp_int> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            std::size_t i0 = p[j0], j1 = 0;
            cpp_int delta = inf;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                cpp_int cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    AssignmentResult res;
    res.row_to_col.assign(n, 0);
    Rational total = 0;
    for (std::size_t j = 1; j <= n; ++j) {
        std::size_t i = p[j];
        res.row_to_col[i - 1] = j - 1;
        if (is_forbidden(i - 1, j - 1)) return res;  // infeasible
        total += *w[i - 1][j - 1];
    }
    res.feasible = true;
    res.value = std::move(total);
    return res;
}

namespace {

bool try_augment(std::size_t r, const std::vector<std::vector<bool>>& support,
                 std::vector<int>& row_to_col, std::vector<int>& col_to_row,
                 std::vector<bool>& seen) {
    for (std::size_t c = 0; c < support[r].size(); ++c) {
        if (!support[r][c] || seen[c]) continue;
        seen[c] = true;
        if (col_to_row[c] < 0 ||
            try_augment(static_cast<std::size_t>(col_to_row[c]), support, row_to_col, col_to_row, seen)) {
            row_to_col[r] = static_cast<int>(c);
            col_to_row[c] = static_cast<int>(r);
            return true;
        }
    }
    return false;
}

}  // namespace

MatchingCover max_matching_with_cover(const std::vector<std::vector<bool>>& support) {
    const std::size_t m = support.size();
    if (m == 0) throw ShapeError("empty support grid");
    const std::size_t n = support.front().size();
    for (const auto& row : support)
        if (row.size() != n) throw ShapeError("ragged support grid");

    MatchingCover out;
    out.row_to_col.assign(m, -1);
    std::vector<int> col_to_row(n, -1);
    for (std::size_t r = 0; r < m; ++r) {
        std::vector<bool> seen(n, false);
        if (try_augment(r, support, out.row_to_col, col_to_row, seen)) ++out.size;
    }

    // Koenig: alternate from unmatched rows; cover = unvisited rows plus
    // visited columns.
    std::vector<bool> row_visited(m, false), col_visited(n, false);
    std::vector<std::size_t> queue;
    for (std::size_t r = 0; r < m; ++r)
        if (out.row_to_col[r] < 0) {
            row_visited[r] = true;
            queue.push_back(r);
        }
    while (!queue.empty()) {
        std::size_t r = queue.back();
        queue.pop_back();
        for (std::size_t c = 0; c < n; ++c) {
            if (!support[r][c] || col_visited[c]) continue;
            col_visited[c] = true;
            int r2 = col_to_row[c];
            if (r2 >= 0 && !row_visited[static_cast<std::size_t>(r2)]) {
                row_visited[static_cast<std::size_t>(r2)] = true;
                queue.push_back(static_cast<std::size_t>(r2));
            }
        }
    }
    out.row_covered.assign(m, false);
    out.col_covered.assign(n, false);
    for (std::size_t r = 0; r < m; ++r) out.row_covered[r] = !row_visited[r];
    for (std::size_t c = 0; c < n; ++c) out.col_covered[c] = col_visited[c];
    return out;
}

}  // namespace trop
