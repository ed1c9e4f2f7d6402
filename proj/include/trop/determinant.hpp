#pragma once

#include <optional>
#include <vector>

#include "trop/matrix.hpp"

namespace trop {

enum class DetMethod { Brute, Expand, Fast, Auto };

/// Largest size accepted by the factorial-enumeration paths.
inline constexpr std::size_t kBruteCap = 10;

/// The tropical determinant (a permanent): the (+)-sum over all permutation
/// products.  `Brute` enumerates permutations (n <= 10), `Expand` uses the
/// minor expansion, `Fast` solves the assignment problem on the projected
/// matrix and then decides the tag exactly; all three agree.
Scalar det(const Matrix& a, DetMethod method = DetMethod::Auto);

/// Minor expansion anchored at row i: (+)_j a_ij (.) |A_ij|.  Equals det(a)
/// for every row.
Scalar det_expand(const Matrix& a, std::size_t i);

/// A permutation attaining the determinant's projected value, with its
/// product weight.
struct AchievingPermutation {
    std::vector<std::size_t> sigma;  // 1-based images sigma(1..n)
    Scalar weight;
};

/// All permutations whose product attains realize(det(a)); empty iff
/// det(a) = -inf.  Enumerative; n <= 10.
std::vector<AchievingPermutation> achieving_permutations(const Matrix& a);

/// True iff det(a) lies in the ghost part (ghost-tagged or -inf).
bool is_singular(const Matrix& a);

/// Adjoint: entry (i,j) is |A_{j,i}|, the transposed matrix of minor
/// determinants, so each diagonal entry of A (.) Adj(A) expands to |A|.
/// For a 1x1 matrix the empty minor determinant is the unit 0.
Matrix adjoint(const Matrix& a);

/// k rows sharing n+1-k all-(-inf) columns; certifies det = -inf.
struct RankDefectCertificate {
    std::vector<std::size_t> row_set;  // k rows, ascending
    std::vector<std::size_t> col_set;  // n+1-k columns, ascending
};

/// Certificate iff det(a) = -inf, found through the Koenig cover of a
/// maximum matching on the finite support; nullopt otherwise.
std::optional<RankDefectCertificate> rank_defect_certificate(const Matrix& a);

/// Re-checks a certificate against the matrix it came from.
bool check_certificate(const Matrix& a, const RankDefectCertificate& cert);

}  // namespace trop
