#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "trop/scalar.hpp"

namespace trop {

/// Weight grid for the assignment problem: absent cells are forbidden
/// (the -inf support of a tropical matrix).  0-based.
using WeightGrid = std::vector<std::vector<std::optional<Rational>>>;

struct AssignmentResult {
    bool feasible = false;
    std::vector<std::size_t> row_to_col;  // 0-based permutation, valid iff feasible
    Rational value;                       // total weight, valid iff feasible
};

/// Exact maximum-weight perfect assignment on the finite cells of `w`
/// (square grid).  An optional extra cell can be forbidden on top of the
/// grid's own gaps, which is how second-best optima are probed.
///
/// Internally scales all weights to a common integer grid and runs an
/// O(n^3) Hungarian method with big-integer potentials, so the optimum is
/// exact for any rational input.
AssignmentResult max_assignment(const WeightGrid& w,
                                std::optional<std::pair<std::size_t, std::size_t>> forbidden = std::nullopt);

/// Maximum bipartite matching on the finite support plus the Koenig vertex
/// cover certifying its maximality.  0-based.
struct MatchingCover {
    std::size_t size = 0;
    std::vector<int> row_to_col;    // -1 when unmatched
    std::vector<bool> row_covered;  // rows in the minimum vertex cover
    std::vector<bool> col_covered;  // columns in the minimum vertex cover
};

MatchingCover max_matching_with_cover(const std::vector<std::vector<bool>>& support);

}  // namespace trop
