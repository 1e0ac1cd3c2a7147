#include "ctxw/independence.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "ctxw/error.hpp"

namespace ctxw {

namespace {

using Clock = std::chrono::steady_clock;

struct BruteForce {
    std::vector<std::uint32_t> adj;
    int best = 0;

    void run(std::uint32_t cand, int size) {
        if (cand == 0) {
            best = std::max(best, size);
            return;
        }
        if (size + std::popcount(cand) <= best) return;
        const int v = std::countr_zero(cand);
        const std::uint32_t bit = 1u << v;
        run(cand & ~adj[v] & ~bit, size + 1);
        run(cand & ~bit, size);
    }
};

// Maximum clique search over a relabelled complement. Position k in the
// search corresponds to original vertex order[k]; lower positions are coloured
// first, so they end up in lower colour classes.
class CliqueSearch {
public:
    CliqueSearch(const Graph& g, const SearchBudget& budget) : budget_(budget), n_(g.order()) {
        const Graph h = complement(g);
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
        std::vector<Vertex> position(n_);
        for (std::size_t k = 0; k < n_; ++k) position[order_[k]] = static_cast<Vertex>(k);
        adj_.assign(n_, Bitset(n_));
        for (std::size_t k = 0; k < n_; ++k) {
            const auto& row = h.neighbors(order_[k]);
            for (auto v = row.first(); v < n_; v = row.next(v)) adj_[k].set(position[v]);
        }
        scratch_.resize(n_ + 1);
        start_ = Clock::now();
    }

    void seed(std::span<const Vertex> independent_set) {
        best_.clear();
        std::vector<Vertex> position(n_);
        for (std::size_t k = 0; k < n_; ++k) position[order_[k]] = static_cast<Vertex>(k);
        for (auto v : independent_set) best_.push_back(position[v]);
    }

    IndependenceResult run() {
        Bitset all(n_);
        all.set_all();
        current_.clear();
        int root_bound = static_cast<int>(n_);
        if (!target_reached()) expand(all, /*depth=*/0, &root_bound);

        IndependenceResult r;
        r.lower_bound = static_cast<int>(best_.size());
        r.upper_bound = stopped_ ? std::max(r.lower_bound, root_bound) : r.lower_bound;
        r.exact = r.lower_bound == r.upper_bound;
        for (auto k : best_) r.witness.push_back(order_[k]);
        std::sort(r.witness.begin(), r.witness.end());
        r.nodes_explored = nodes_;
        r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        return r;
    }

private:
    bool target_reached() const { return budget_.target && static_cast<int>(best_.size()) >= *budget_.target; }

    bool out_of_budget() {
        if (stopped_) return true;
        if (budget_.node_limit && nodes_ >= *budget_.node_limit) stopped_ = true;
        if ((nodes_ & 0xff) == 0 && Clock::now() - start_ > budget_.time_limit) stopped_ = true;
        return stopped_;
    }

    // Greedy sequential colouring of `cand`; fills vertices/colours in
    // non-decreasing colour order.
    void colour(const Bitset& cand, std::vector<Vertex>& verts, std::vector<int>& colours) {
        verts.clear();
        colours.clear();
        Bitset uncoloured = cand;
        Bitset available(n_);
        int k = 0;
        while (uncoloured.any()) {
            ++k;
            available = uncoloured;
            for (auto v = available.first(); v < n_; v = available.first()) {
                available.reset(v);
                uncoloured.reset(v);
                available.subtract(adj_[v]);
                verts.push_back(static_cast<Vertex>(v));
                colours.push_back(k);
            }
        }
    }

    // root_bound, when non-null, receives the colour bound of the root branch
    // that was in progress when the budget ran out.
    void expand(Bitset cand, std::size_t depth, int* root_bound) {
        // scratch_ is sized once up front, so these references stay valid
        // across the recursive calls below.
        auto& [verts, colours] = scratch_[depth];
        colour(cand, verts, colours);
        const auto count = verts.size();
        for (std::size_t i = count; i-- > 0;) {
            const int bound = static_cast<int>(current_.size()) + colours[i];
            if (bound <= static_cast<int>(best_.size())) return;
            ++nodes_;
            if (out_of_budget() || target_reached()) {
                stopped_ = true;
                if (root_bound) *root_bound = colours[i];
                return;
            }
            const Vertex v = verts[i];
            current_.push_back(v);
            Bitset next = cand & adj_[v];
            if (next.none()) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(std::move(next), depth + 1, nullptr);
            }
            current_.pop_back();
            if (stopped_) {
                if (root_bound) *root_bound = colours[i];
                return;
            }
            cand.reset(v);
        }
    }

    SearchBudget budget_;
    std::size_t n_;
    std::vector<Vertex> order_;
    std::vector<Bitset> adj_;
    std::vector<std::pair<std::vector<Vertex>, std::vector<int>>> scratch_;
    std::vector<Vertex> current_;
    std::vector<Vertex> best_;
    std::uint64_t nodes_ = 0;
    bool stopped_ = false;
    Clock::time_point start_;
};

}  // namespace

int brute_force_alpha(const Graph& g) {
    const auto n = g.order();
    if (n > kBruteForceMaxOrder)
        throw InputError(fmt::format("brute force is limited to n <= {}, got {}", kBruteForceMaxOrder, n));
    BruteForce bf;
    bf.adj.resize(n);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u = 0; u < n; ++u)
            if (g.adjacent(v, u)) bf.adj[v] |= 1u << u;
    bf.run((1u << n) - 1u, 0);
    return bf.best;
}

IndependenceResult greedy_lower_bound(const Graph& g) {
    const auto n = g.order();
    Bitset alive(n);
    alive.set_all();
    IndependenceResult r;
    while (alive.any()) {
        std::size_t pick = n, pick_degree = n + 1;
        for (auto v = alive.first(); v < n; v = alive.next(v)) {
            const auto d = (g.neighbors(static_cast<Vertex>(v)) & alive).count();
            if (d < pick_degree) {
                pick = v;
                pick_degree = d;
            }
        }
        r.witness.push_back(static_cast<Vertex>(pick));
        alive.reset(pick);
        alive.subtract(g.neighbors(static_cast<Vertex>(pick)));
    }
    std::sort(r.witness.begin(), r.witness.end());
    r.lower_bound = static_cast<int>(r.witness.size());
    r.upper_bound = static_cast<int>(n);
    r.exact = r.lower_bound == r.upper_bound;
    return r;
}

IndependenceResult max_independent_set(const Graph& g, const SearchBudget& budget) {
    const auto n = g.order();
    IndependenceResult r;
    if (n == 0) return r;
    if (g.is_edgeless() || g.is_complete()) {
        r = greedy_lower_bound(g);
        r.upper_bound = g.is_edgeless() ? static_cast<int>(n) : 1;
        r.exact = true;
        return r;
    }
    CliqueSearch search(g, budget);
    search.seed(greedy_lower_bound(g).witness);
    r = search.run();
    if (!is_independent(g, r.witness) || static_cast<int>(r.witness.size()) != r.lower_bound)
        throw InvariantError("independence search returned an invalid witness");
    return r;
}

bool is_independent(const Graph& g, std::span<const Vertex> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= g.order()) return false;
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j] || g.adjacent(vertices[i], vertices[j])) return false;
    }
    return true;
}

}  // namespace ctxw
