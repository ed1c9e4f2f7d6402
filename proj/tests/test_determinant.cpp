#include <doctest.h>

#include "trop/corpus.hpp"
#include "trop/determinant.hpp"
#include "trop/io.hpp"

using namespace trop;

namespace {
Matrix paper3x3() { return parse_matrix("3 3\n1 4 -1\n1 0 6\n-4 1 3\n"); }
}  // namespace

TEST_CASE("determinant golden values") {
    CHECK(det(paper3x3()) == Scalar::ghost(8));
    CHECK(det(Matrix::identity(3)) == Scalar::real(0));
    CHECK(det(parse_matrix("2 2\n0 1\n2 0\n")) == Scalar::real(3));
    CHECK(det(parse_matrix("2 2\n0 -inf\n0 -inf\n")) == Scalar::neg_inf());
    CHECK(det(parse_matrix("1 1\n5g\n")) == Scalar::ghost(5));
    CHECK_THROWS_AS(det(Matrix::zero(2, 3)), ShapeError);
}

TEST_CASE("minor expansion agrees on every row") {
    Matrix a = paper3x3();
    for (std::size_t i = 1; i <= 3; ++i) CHECK(det_expand(a, i) == Scalar::ghost(8));
    CHECK(det_expand(Matrix::identity(2), 1) == Scalar::real(0));
    CHECK_THROWS_AS(det_expand(a, 4), IndexError);

    Corpus corpus(3);
    for (int iter = 0; iter < 50; ++iter) {
        Matrix m = corpus.matrix(4, 4);
        Scalar d = det(m, DetMethod::Brute);
        for (std::size_t i = 1; i <= 4; ++i) CHECK(det_expand(m, i) == d);
    }
}

TEST_CASE("brute, expand, and fast methods coincide") {
    Corpus corpus(17);
    for (std::size_t n = 2; n <= 5; ++n) {
        for (int iter = 0; iter < 120; ++iter) {
            Matrix a = corpus.matrix(n, n);
            Scalar b = det(a, DetMethod::Brute);
            CHECK(det(a, DetMethod::Fast) == b);
            CHECK(det(a, DetMethod::Expand) == b);
        }
    }
}

TEST_CASE("size guard") {
    CHECK_THROWS_AS(det(Matrix::identity(11), DetMethod::Brute), SizeGuardError);
    CHECK(det(Matrix::identity(11), DetMethod::Fast) == Scalar::real(0));
}

TEST_CASE("achieving permutations") {
    auto aps = achieving_permutations(paper3x3());
    REQUIRE(aps.size() == 2);
    CHECK(aps[0].sigma == std::vector<std::size_t>{1, 3, 2});
    CHECK(aps[1].sigma == std::vector<std::size_t>{2, 1, 3});
    CHECK(aps[0].weight == Scalar::real(8));
    CHECK(aps[1].weight == Scalar::real(8));

    auto id = achieving_permutations(Matrix::identity(2));
    REQUIRE(id.size() == 1);
    CHECK(id[0].sigma == std::vector<std::size_t>{1, 2});
    CHECK(id[0].weight == Scalar::real(0));

    CHECK(achieving_permutations(parse_matrix("2 2\n0 0\n0 0\n")).size() == 2);
    CHECK(achieving_permutations(parse_matrix("2 2\n0 -inf\n0 -inf\n")).empty());
}

TEST_CASE("singularity") {
    CHECK(is_singular(paper3x3()));
    CHECK_FALSE(is_singular(Matrix::identity(4)));
    CHECK(is_singular(parse_matrix("2 2\n0 0\n0 0\n")));

    // singular iff several achieving permutations, or the single one walks a
    // ghost entry, or det = -inf
    Corpus corpus(23);
    for (int iter = 0; iter < 200; ++iter) {
        Matrix a = corpus.matrix(3, 3);
        auto aps = achieving_permutations(a);
        bool ghost_walk = false;
        if (aps.size() == 1)
            for (std::size_t i = 0; i < 3; ++i)
                if (a.at(i + 1, aps[0].sigma[i]).has_ghost_tag()) ghost_walk = true;
        CHECK(is_singular(a) == (aps.size() >= 2 || ghost_walk || aps.empty()));
    }
}

TEST_CASE("determinant invariances") {
    Corpus corpus(29);
    for (int iter = 0; iter < 100; ++iter) {
        Matrix a = corpus.matrix(4, 4);
        Scalar d = det(a);
        CHECK(det(transpose(a)) == d);
        // swap two rows
        Matrix b = submatrix(a, {2, 1, 3, 4}, {1, 2, 3, 4});
        CHECK(det(b) == d);
        // scale a row by a real
        Scalar c = Scalar::real(corpus.magnitude());
        Matrix s = a;
        for (std::size_t j = 1; j <= 4; ++j) s.at(2, j) = mul(c, s.at(2, j));
        CHECK(det(s) == mul(c, d));
    }
}

TEST_CASE("adjoint") {
    Matrix a = parse_matrix("2 2\n0 1\n2 0\n");
    CHECK(adjoint(a) == a);
    CHECK(adjoint(Matrix::identity(2)) == Matrix::identity(2));
    CHECK(adjoint(Matrix::identity(1)) == Matrix::identity(1));

    // diagonal of A (.) Adj(A) is det(A) up to ghost on singular matrices
    Corpus corpus(31);
    for (int iter = 0; iter < 100; ++iter) {
        Matrix m = corpus.matrix(3, 3);
        Scalar d = det(m);
        Matrix prod = mat_mul(m, adjoint(m));
        for (std::size_t i = 1; i <= 3; ++i) CHECK(realize(prod.at(i, i)) == realize(d));
    }
}

TEST_CASE("rank defect certificates") {
    auto c = rank_defect_certificate(parse_matrix("2 2\n0 -inf\n0 -inf\n"));
    REQUIRE(c.has_value());
    CHECK(c->row_set == std::vector<std::size_t>{1, 2});
    CHECK(c->col_set == std::vector<std::size_t>{2});

    CHECK_FALSE(rank_defect_certificate(paper3x3()).has_value());

    // three rows all -inf in the second column: defect 1
    Matrix rows4 = parse_matrix("4 4\n2 -inf 2 -inf\n-inf -inf -inf 2\n1 -inf -inf -inf\n0 -inf 0 0\n");
    auto c4 = rank_defect_certificate(rows4);
    REQUIRE(c4.has_value());
    CHECK(check_certificate(rows4, *c4));

    Corpus corpus(37);
    for (int iter = 0; iter < 300; ++iter) {
        Matrix a = corpus.matrix(4, 4, 60, 10);
        auto cert = rank_defect_certificate(a);
        CHECK(cert.has_value() == det(a, DetMethod::Brute).is_neg_inf());
        if (cert) CHECK(check_certificate(a, *cert));
    }
}

TEST_CASE("zero-entry lemmas for matrices bounded by 0g") {
    Corpus corpus(41);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t n = 2 + corpus.uniform(3);
        Matrix two = corpus.zero_bounded_matrix(n, Corpus::ColumnRule::TwoZerosOrGhost);
        CHECK(is_singular(two));
        Matrix gz = corpus.zero_bounded_matrix(n, Corpus::ColumnRule::GhostZero);
        CHECK(is_singular(gz));
        // each column holding a 0 or 0g entry: some achieving permutation
        // walks a {0, 0g} cell
        bool found = false;
        for (const auto& ap : achieving_permutations(two))
            for (std::size_t i = 1; i <= n && !found; ++i) {
                const Scalar& x = two.at(i, ap.sigma[i - 1]);
                if (!x.is_neg_inf() && x.magnitude() == 0) found = true;
            }
        CHECK(found);
    }
}
