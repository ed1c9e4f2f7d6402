#include <doctest.h>

#include "trop/corpus.hpp"
#include "trop/determinant.hpp"
#include "trop/io.hpp"
#include "trop/linsys.hpp"

using namespace trop;

TEST_CASE("form evaluation") {
    Vector row{Scalar::real(0), Scalar::real(1)};
    CHECK(eval_form(row, {Scalar::real(0), Scalar::real(0)}) == Scalar::real(1));
    CHECK(eval_form(row, {Scalar::real(1), Scalar::real(0)}) == Scalar::ghost(1));
    CHECK(eval_form(row, {Scalar::neg_inf(), Scalar::neg_inf()}) == Scalar::neg_inf());
    CHECK_THROWS_AS(eval_form(row, {Scalar::real(0)}), ShapeError);
}

TEST_CASE("solution reports") {
    LinearSystem s{parse_matrix("2 2\n0 1\n0 1\n")};
    SolutionReport hit = is_solution(s, {Scalar::real(1), Scalar::real(0)});
    CHECK(hit.solves);
    CHECK(hit.kind == SolutionKind::PureReal);
    CHECK(hit.form_values == std::vector<Scalar>{Scalar::ghost(1), Scalar::ghost(1)});

    SolutionReport miss = is_solution(s, {Scalar::real(0), Scalar::real(0)});
    CHECK_FALSE(miss.solves);

    SolutionReport ghostly = is_solution(s, {Scalar::ghost(0), Scalar::ghost(0)});
    CHECK(ghostly.solves);
    CHECK(ghostly.kind == SolutionKind::Ghost);

    SolutionReport mixed = is_solution(s, {Scalar::real(0), Scalar::ghost(0)});
    CHECK(mixed.kind == SolutionKind::Mixed);
}

TEST_CASE("pure real solutions of singular square systems") {
    LinearSystem s{parse_matrix("2 2\n0 1\n0 1\n")};
    auto rep = find_pure_real_solution(s);
    REQUIRE(rep.has_value());
    CHECK(rep->solves);
    CHECK(rep->kind == SolutionKind::PureReal);

    CHECK_FALSE(find_pure_real_solution({Matrix::identity(3)}).has_value());
    CHECK_THROWS_AS(find_pure_real_solution({Matrix::zero(2, 3)}), ShapeError);
}

TEST_CASE("degenerate column forces a diagnostic") {
    // every value of the system is (x1, x1), never ghost at a real point
    LinearSystem s{parse_matrix("2 2\n0 -inf\n0 -inf\n")};
    auto rep = find_pure_real_solution(s);
    REQUIRE(rep.has_value());
    CHECK(rep->kind != SolutionKind::PureReal);
    CHECK(is_solution(s, rep->point).solves == rep->solves);
}

TEST_CASE("solver across the corpus") {
    Corpus corpus(83);
    for (int iter = 0; iter < 150; ++iter) {
        std::size_t n = 2 + corpus.uniform(3);
        Matrix a = corpus.singular_real_matrix(n);
        auto rep = find_pure_real_solution({a});
        REQUIRE(rep.has_value());
        CHECK(rep->solves);
        CHECK(rep->kind == SolutionKind::PureReal);
        // the report's claim re-checks against the system
        SolutionReport again = is_solution({a}, rep->point);
        CHECK(again.solves);
        CHECK(again.kind == SolutionKind::PureReal);
    }
    for (int iter = 0; iter < 150; ++iter) {
        Matrix a = corpus.nonsingular_real_matrix(2 + corpus.uniform(3));
        CHECK_FALSE(find_pure_real_solution({a}).has_value());
    }
}
