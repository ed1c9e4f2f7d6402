#include <doctest.h>

#include <algorithm>

#include "trop/corpus.hpp"
#include "trop/digraph.hpp"
#include "trop/determinant.hpp"
#include "trop/io.hpp"

using namespace trop;

TEST_CASE("digraph of a matrix") {
    Matrix a = parse_matrix("3 3\n1 4 -1\n1 0 6\n-4 1 3\n");
    Digraph g = digraph_of(a);
    CHECK(g.vertex_count == 3);
    CHECK(g.edges.size() == 9);

    Digraph id = digraph_of(Matrix::identity(2));
    CHECK(id.edges.size() == 2);
    for (const auto& e : id.edges) {
        CHECK(e.from == e.to);
        CHECK(e.weight == Scalar::real(0));
        CHECK(e.multiplicity == 1);
    }
    CHECK(out_degree(id, 1) == 1);
    CHECK(in_degree(id, 2) == 1);

    CHECK_THROWS_AS(digraph_of(Matrix::zero(2, 3)), ShapeError);
}

TEST_CASE("simple cycle search") {
    // strictly upper triangular: acyclic
    Matrix tri = parse_matrix("3 3\n-inf 1 2\n-inf -inf 3\n-inf -inf -inf\n");
    CHECK_FALSE(find_simple_cycle(digraph_of(tri)).has_value());

    // a 2-cycle through vertices 1 and 2 plus dead ends
    Matrix cyc = parse_matrix("3 3\n-inf 1 2\n3 -inf -inf\n-inf -inf -inf\n");
    auto mc = find_simple_cycle(digraph_of(cyc));
    REQUIRE(mc.has_value());
    REQUIRE(mc->cycles.size() == 1);
    CHECK(mc->length == 2);
    CHECK(mc->weight == Scalar::real(4));
    std::vector<std::size_t> verts = mc->cycles[0];
    std::sort(verts.begin(), verts.end());
    CHECK(verts == std::vector<std::size_t>{1, 2});

    // a loop counts as a simple cycle of length 1
    auto loop = find_simple_cycle(digraph_of(parse_matrix("1 1\n5\n")));
    REQUIRE(loop.has_value());
    CHECK(loop->length == 1);
    CHECK(loop->weight == Scalar::real(5));
}

TEST_CASE("reduced zero graph") {
    Matrix a = parse_matrix("2 2\n0 0g\n1 -inf\n");
    Digraph r = reduced_zero_graph(digraph_of(a));
    REQUIRE(r.edges.size() == 2);
    CHECK(r.edges[0].weight == Scalar::real(0));
    CHECK(r.edges[0].multiplicity == 1);
    CHECK(r.edges[1].weight == Scalar::ghost(0));
    CHECK(r.edges[1].multiplicity == 2);
    // degrees count multiplicity
    CHECK(out_degree(r, 1) == 3);
    CHECK(in_degree(r, 2) == 2);
}

TEST_CASE("permutation multicycles") {
    Matrix a = parse_matrix("3 3\n1 4 -1\n1 0 6\n-4 1 3\n");
    Multicycle one = multicycle_of_permutation(a, {1, 3, 2});
    CHECK(one.length == 3);
    CHECK(one.weight == Scalar::real(8));
    CHECK(one.cycles.size() == 2);  // fixed point 1 plus the swap (2 3)

    Multicycle full = multicycle_of_permutation(a, {2, 3, 1});
    CHECK(full.cycles.size() == 1);
    CHECK(full.length == 3);
    CHECK(full.weight == Scalar::real(6));
}

TEST_CASE("n-multicycle weight equals the determinant") {
    Matrix a = parse_matrix("3 3\n1 4 -1\n1 0 6\n-4 1 3\n");
    CHECK(max_multicycle_weight(a, 3) == Scalar::ghost(8));
    CHECK_THROWS_AS(max_multicycle_weight(a, 2), DomainError);

    Corpus corpus(53);
    for (int iter = 0; iter < 100; ++iter) {
        std::size_t n = 2 + corpus.uniform(4);
        Matrix m = corpus.matrix(n, n);
        CHECK(max_multicycle_weight(m, n) == det(m, DetMethod::Brute));
    }
}

TEST_CASE("edge list rendering") {
    CHECK(to_edge_list(digraph_of(Matrix::identity(2))) == "1 1 0\n2 2 0\n");
    CHECK(to_edge_list(digraph_of(parse_matrix("2 2\n-inf 1g\n-inf -inf\n"))) == "1 2 1g\n");
}
