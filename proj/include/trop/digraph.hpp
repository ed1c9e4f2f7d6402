#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trop/matrix.hpp"

namespace trop {

/// Weighted digraph of a square matrix: vertices 1..n, an edge (i,j)
/// whenever a_ij != -inf.  Reduced graphs mark 0^g edges with
/// multiplicity 2 for degree counting.
struct DigraphEdge {
    std::size_t from;
    std::size_t to;
    Scalar weight;
    std::size_t multiplicity = 1;
};

struct Digraph {
    std::size_t vertex_count = 0;
    std::vector<DigraphEdge> edges;
};

/// Disjoint simple cycles with their total length and product weight.
struct Multicycle {
    std::vector<std::vector<std::size_t>> cycles;  // each cycle as a vertex list
    std::size_t length = 0;
    Scalar weight;
};

Digraph digraph_of(const Matrix& a);

std::size_t out_degree(const Digraph& g, std::size_t v);
std::size_t in_degree(const Digraph& g, std::size_t v);

/// Some simple cycle, found by pruning sinks and sources and walking the
/// remainder; nullopt iff the graph is acyclic.
std::optional<Multicycle> find_simple_cycle(const Digraph& g);

/// Keeps exactly the edges of weight 0 or 0^g; a 0^g edge is kept with
/// multiplicity 2.
Digraph reduced_zero_graph(const Digraph& g);

/// Maximal (+)-weight over all k-multicycles; restricted to k = n, where
/// multicycles are exactly permutation cycle covers and the value matches
/// the determinant.  Enumerative; n <= 10.
Scalar max_multicycle_weight(const Matrix& a, std::size_t k);

/// Factors a permutation (1-based images) into its multicycle in G_A.
Multicycle multicycle_of_permutation(const Matrix& a, const std::vector<std::size_t>& sigma);

/// One `i j weight` line per edge.
std::string to_edge_list(const Digraph& g);

}  // namespace trop
