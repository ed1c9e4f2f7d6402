#pragma once

#include <optional>
#include <vector>

#include "trop/determinant.hpp"
#include "trop/matrix.hpp"

namespace trop {

/// Largest dimension accepted by the subset-enumeration rank machinery.
inline constexpr std::size_t kRankCap = 8;

/// Coefficients certifying tropical dependence: each real or -inf, never
/// ghost, not all -inf, and the coefficient combination of the witnessed
/// rows is a ghost vector.
struct DependenceWitness {
    std::vector<Scalar> coefficients;
};

/// Location of a square submatrix (1-based, ascending index sets).
struct MinorLocation {
    std::vector<std::size_t> row_set;
    std::vector<std::size_t> col_set;
    std::size_t size() const { return row_set.size(); }
};

/// Checks a coefficient tuple against the rows it is supposed to witness.
bool validate_witness(const std::vector<Vector>& rows, const DependenceWitness& w);

/// True iff the vectors are tropically dependent: rank of the stacked
/// matrix < m.  Any m > n vectors are dependent.
bool is_dependent(const std::vector<Vector>& vectors);

/// Constructive witness following the rank-theorem proofs: square inputs go
/// through square_witness; wide sets (m > n) pick n+1 rows and duplicate a
/// column; long sets (m < n) split off the first/last column, recurse, and
/// recombine through the 2x2 dependence of the column sums.  The result is
/// always re-validated before being returned.
DependenceWitness dependence_witness(const std::vector<Vector>& vectors);

/// Witness for the rows of a singular square matrix.  det != -inf: permute
/// columns so an achieving permutation is the identity, renumber the minimal
/// singular diagonal-achieving principal submatrix to the upper left, and
/// take alpha_i as the projected first-column minor determinants.
/// det = -inf: restrict the rank-defect rows to their finite columns and
/// recurse.  Throws DomainError on nonsingular input.
DependenceWitness square_witness(const Matrix& a);

/// Maximal number of tropically independent rows, computed as the size of
/// the largest nonsingular square submatrix.  Guarded at m, n <= 8.
std::size_t rank(const Matrix& a);

/// Location of a nonsingular k x k submatrix with k = rank(a); nullopt iff
/// the rank is 0.  Deterministic tie-break: largest size first, index sets
/// in lexicographic order.
std::optional<MinorLocation> max_nonsingular_minor(const Matrix& a);

/// Rank entry point restricted to matrices without ghost entries, where the
/// value coincides with the Develin-Santos-Sturmfels rank.  Throws
/// DomainError on ghost entries.
std::size_t rank_dss(const Matrix& a);

}  // namespace trop
