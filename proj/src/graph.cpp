#include "ctxw/graph.hpp"

#include <fmt/format.h>

#include "ctxw/error.hpp"
#include "ctxw/rng.hpp"

namespace ctxw {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : rows_(n, Bitset(n)) {
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw InputError(fmt::format("edge ({}, {}) has an endpoint outside 0..{}", u, v, n - 1));
        if (u == v) throw InputError(fmt::format("self-loop at vertex {}", u));
        rows_[u].set(v);
        rows_[v].set(u);
    }
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.count();
    edge_count_ = twice / 2;
}

Graph::Graph(std::vector<Bitset> rows) : rows_(std::move(rows)) {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.count();
    edge_count_ = twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (auto v = rows_[u].next(u); v < order(); v = rows_[u].next(v)) out.emplace_back(u, static_cast<Vertex>(v));
    return out;
}

Graph complement(const Graph& g) {
    std::vector<Bitset> rows = g.rows_;
    for (std::size_t v = 0; v < rows.size(); ++v) {
        rows[v].flip();
        rows[v].reset(v);
    }
    return Graph(std::move(rows));
}

Graph edgeless(std::size_t n) {
    if (n == 0) throw InputError("graph needs at least one vertex");
    return Graph(n, std::span<const Edge>{});
}

Graph cycle(std::size_t n) {
    if (n < 3) throw InputError(fmt::format("cycle needs n >= 3, got {}", n));
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    return Graph(n, e);
}

Graph complete(std::size_t n) {
    if (n < 1) throw InputError("complete graph needs n >= 1");
    return complement(edgeless(n));
}

std::vector<std::vector<int>> subset_family_vertices(int q) {
    if (q <= 0) throw InputError("q must be positive");
    const int ground = 2 * q;
    std::vector<std::vector<int>> out;
    std::vector<int> cur(q);
    for (int i = 0; i < q; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = q - 1;
        while (i >= 0 && cur[i] == ground - q + i + 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < q; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

Graph intersection_family(SubsetFamilySpec spec) {
    if (!(spec.q > spec.s && spec.s > 0))
        throw InputError(fmt::format("G(q,s) needs q > s > 0, got q={} s={}", spec.q, spec.s));
    if (spec.q > 12) throw InputError("q > 12 would exceed 2.7 million vertices");
    auto subsets = subset_family_vertices(spec.q);
    std::vector<std::uint32_t> masks;
    masks.reserve(subsets.size());
    for (const auto& s : subsets) {
        std::uint32_t m = 0;
        for (int x : s) m |= 1u << (x - 1);
        masks.push_back(m);
    }
    std::vector<Edge> e;
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = i + 1; j < masks.size(); ++j)
            if (std::popcount(masks[i] & masks[j]) == spec.s) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return Graph(masks.size(), e);
}

Graph alon_r2() {
    std::vector<Edge> squares;
    for (Vertex g = 0; g < 16; ++g)
        for (Vertex k = 0; k < 4; ++k) squares.emplace_back(4 * g + k, 4 * g + (k + 1) % 4);
    return complement(Graph(64, squares));
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputError(fmt::format("edge probability must lie in [0, 1], got {}", p));
    if (n == 0) throw InputError("graph needs at least one vertex");
    Rng rng(seed);
    std::vector<Edge> e;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng.uniform() < p) e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return Graph(n, e);
}

void check_graph_invariants(const Graph& g) {
    std::size_t twice = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
        if (g.adjacent(u, u)) throw InvariantError(fmt::format("vertex {} adjacent to itself", u));
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.adjacent(u, v) != g.adjacent(v, u)) throw InvariantError("adjacency not symmetric");
        twice += g.degree(u);
    }
    if (twice != 2 * g.edge_count()) throw InvariantError("edge count out of sync with adjacency");
}

}  // namespace ctxw
