#include "trop/digraph.hpp"

#include <algorithm>
#include <numeric>

#include "trop/determinant.hpp"

namespace trop {

Digraph digraph_of(const Matrix& a) {
    if (!a.is_square()) throw ShapeError("digraph_of: matrix is not square");
    Digraph g;
    g.vertex_count = a.rows();
    for (std::size_t i = 1; i <= a.rows(); ++i)
        for (std::size_t j = 1; j <= a.cols(); ++j)
            if (!a.at(i, j).is_neg_inf()) g.edges.push_back({i, j, a.at(i, j), 1});
    return g;
}

std::size_t out_degree(const Digraph& g, std::size_t v) {
    if (v < 1 || v > g.vertex_count) throw IndexError("out_degree: vertex out of range");
    std::size_t d = 0;
    for (const auto& e : g.edges)
        if (e.from == v) d += e.multiplicity;
    return d;
}

std::size_t in_degree(const Digraph& g, std::size_t v) {
    if (v < 1 || v > g.vertex_count) throw IndexError("in_degree: vertex out of range");
    std::size_t d = 0;
    for (const auto& e : g.edges)
        if (e.to == v) d += e.multiplicity;
    return d;
}

std::optional<Multicycle> find_simple_cycle(const Digraph& g) {
    const std::size_t n = g.vertex_count;
    std::vector<bool> alive(n + 1, true);
    // Iteratively discard sinks and sources; what survives is covered by
    // cycles.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 1; v <= n; ++v) {
            if (!alive[v]) continue;
            std::size_t din = 0, dout = 0;
            for (const auto& e : g.edges) {
                if (!alive[e.from] || !alive[e.to]) continue;
                if (e.from == v) ++dout;
                if (e.to == v) ++din;
            }
            if (din == 0 || dout == 0) {
                alive[v] = false;
                changed = true;
            }
        }
    }
    std::size_t start = 0;
    for (std::size_t v = 1; v <= n; ++v)
        if (alive[v]) {
            start = v;
            break;
        }
    if (start == 0) return std::nullopt;

    // Walk within the surviving subgraph until a vertex repeats.
    std::vector<std::size_t> path{start};
    std::vector<std::size_t> pos(n + 1, 0);
    pos[start] = 1;
    std::size_t cur = start;
    for (;;) {
        std::size_t next = 0;
        for (const auto& e : g.edges)
            if (e.from == cur && alive[e.to]) {
                next = e.to;
                break;
            }
        if (pos[next] != 0) {
            std::vector<std::size_t> cycle(path.begin() + (pos[next] - 1), path.end());
            Scalar w = Scalar::real(0);
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                std::size_t from = cycle[i], to = cycle[(i + 1) % cycle.size()];
                for (const auto& e : g.edges)
                    if (e.from == from && e.to == to) {
                        w = mul(w, e.weight);
                        break;
                    }
            }
            return Multicycle{{cycle}, cycle.size(), w};
        }
        path.push_back(next);
        pos[next] = path.size();
        cur = next;
    }
}

Digraph reduced_zero_graph(const Digraph& g) {
    Digraph out;
    out.vertex_count = g.vertex_count;
    const Scalar zero = Scalar::real(0);
    const Scalar zero_ghost = Scalar::ghost(0);
    for (const auto& e : g.edges) {
        if (e.weight == zero) out.edges.push_back({e.from, e.to, e.weight, 1});
        else if (e.weight == zero_ghost) out.edges.push_back({e.from, e.to, e.weight, 2});
    }
    return out;
}

Scalar max_multicycle_weight(const Matrix& a, std::size_t k) {
    if (!a.is_square()) throw ShapeError("max_multicycle_weight: matrix is not square");
    if (k != a.rows()) throw DomainError("max_multicycle_weight: only full (k = n) multicycles are supported");
    if (a.rows() > kBruteCap) throw SizeGuardError("max_multicycle_weight capped at n <= 10");
    // n-multicycles are exactly permutation cycle covers, so the maximal
    // weight is the permutation enumeration of the determinant.
    return det(a, DetMethod::Brute);
}

Multicycle multicycle_of_permutation(const Matrix& a, const std::vector<std::size_t>& sigma) {
    if (!a.is_square() || sigma.size() != a.rows())
        throw ShapeError("multicycle_of_permutation: size mismatch");
    const std::size_t n = sigma.size();
    Multicycle mc;
    mc.weight = Scalar::real(0);
    std::vector<bool> seen(n + 1, false);
    for (std::size_t s = 1; s <= n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> cycle;
        std::size_t v = s;
        while (!seen[v]) {
            seen[v] = true;
            cycle.push_back(v);
            mc.weight = mul(mc.weight, a.at(v, sigma[v - 1]));
            v = sigma[v - 1];
        }
        mc.cycles.push_back(std::move(cycle));
    }
    mc.length = n;
    return mc;
}

std::string to_edge_list(const Digraph& g) {
    std::string out;
    for (const auto& e : g.edges) {
        for (std::size_t m = 0; m < e.multiplicity; ++m) {
            out += std::to_string(e.from);
            out += ' ';
            out += std::to_string(e.to);
            out += ' ';
            out += to_string(e.weight);
            out += '\n';
        }
    }
    return out;
}

}  // namespace trop
