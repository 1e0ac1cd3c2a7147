#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ctxw/bitset.hpp"

namespace ctxw {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph with bit-row adjacency. Edges are the exclusivity
/// relation: adjacent events can never both occur. Immutable after
/// construction.
class Graph {
public:
    Graph() = default;

    /// Builds the graph on vertices 0..n-1 with the symmetric closure of
    /// `edges`. Duplicates and reversed pairs are merged. Throws InputError on
    /// an out-of-range endpoint or a self-loop.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t order() const noexcept { return rows_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].test(v); }
    const Bitset& neighbors(Vertex v) const noexcept { return rows_[v]; }
    std::size_t degree(Vertex v) const noexcept { return rows_[v].count(); }

    /// All edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    bool is_edgeless() const noexcept { return edge_count_ == 0; }
    bool is_complete() const noexcept {
        auto n = order();
        return edge_count_ == n * (n - 1) / 2;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph complement(const Graph&);
    explicit Graph(std::vector<Bitset> rows);

    std::vector<Bitset> rows_;
    std::size_t edge_count_ = 0;
};

/// q > s > 0; vertices of G(q,s) are the q-subsets of {1..2q}.
struct SubsetFamilySpec {
    int q = 0;
    int s = 0;
};

Graph complement(const Graph& g);
Graph edgeless(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);

/// The q-subsets of {1..2q} in lexicographic order of their sorted elements.
/// Index i here is vertex i of intersection_family().
std::vector<std::vector<int>> subset_family_vertices(int q);

/// G(q,s): q-subsets of {1..2q}, adjacent iff they share exactly s elements.
Graph intersection_family(SubsetFamilySpec spec);

/// 64 vertices whose complement is 16 disjoint squares on the blocks
/// {4g, 4g+1, 4g+2, 4g+3}, each cycled in that order.
Graph alon_r2();

/// Erdos-Renyi G(n, p). Pairs (u, v), u < v, are visited in lexicographic
/// order and each is kept when the next draw of Rng(seed) is < p.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

/// Throws InvariantError unless adjacency is symmetric with empty diagonal
/// and the cached edge count matches.
void check_graph_invariants(const Graph& g);

}  // namespace ctxw
