#pragma once

#include <cstdint>
#include <random>

#include "trop/matrix.hpp"

namespace trop {

/// Seeded generator for cross-validation corpora.  All randomness used by
/// `check`, `bench`, and the acceptance suite flows through one of these so
/// a run is reproducible from its seed alone.
class Corpus {
public:
    explicit Corpus(std::uint64_t seed) : rng_(seed) {}

    /// Integer magnitude in [lo, hi].
    Rational magnitude(int lo = -9, int hi = 9);

    /// Scalar with the given -inf / ghost weights (percent).
    Scalar scalar(int neg_inf_pct = 15, int ghost_pct = 20, int lo = -9, int hi = 9);

    Matrix matrix(std::size_t rows, std::size_t cols, int neg_inf_pct = 15, int ghost_pct = 20,
                  int lo = -9, int hi = 9);

    /// Fully finite real matrix.
    Matrix real_matrix(std::size_t rows, std::size_t cols, int lo = -9, int hi = 9);

    /// Finite real singular square matrix: n-1 random rows plus the
    /// projected tropical combination of them, in shuffled row order.
    Matrix singular_real_matrix(std::size_t n, int lo = -9, int hi = 9);

    /// Finite real nonsingular square matrix (rejection sampled).
    Matrix nonsingular_real_matrix(std::size_t n, int lo = -9, int hi = 9);

    /// Matrix with every entry <= 0^g and det != -inf, each column holding
    /// either two 0-entries or a 0^g-entry (`two_zeros_or_ghost`) or a
    /// 0^g-entry (`ghost_zero`).
    enum class ColumnRule { TwoZerosOrGhost, GhostZero };
    Matrix zero_bounded_matrix(std::size_t n, ColumnRule rule);

    std::uint64_t uniform(std::uint64_t bound);  // [0, bound)

private:
    std::mt19937_64 rng_;
};

}  // namespace trop
