#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ctxw/graph.hpp"

namespace ctxw {

/// Certified bracket on the independence number alpha(G), the noncontextual
/// bound of the witness sum. `witness` is an explicit independent set of
/// size lower_bound.
struct IndependenceResult {
    int lower_bound = 0;
    int upper_bound = 0;
    std::vector<Vertex> witness;
    bool exact = false;
    std::uint64_t nodes_explored = 0;
    double elapsed_seconds = 0.0;
};

struct SearchBudget {
    std::chrono::duration<double> time_limit{600.0};
    /// Stops after this many search nodes; gives budget outcomes that do not
    /// depend on machine speed.
    std::optional<std::uint64_t> node_limit;
    /// Stops as soon as an independent set of this size is found.
    std::optional<int> target;
};

inline constexpr std::size_t kBruteForceMaxOrder = 25;

/// Exact alpha by exhaustive include/exclude recursion. Test oracle; throws
/// InputError when n > kBruteForceMaxOrder.
int brute_force_alpha(const Graph& g);

/// Minimum-residual-degree greedy, ties to the lowest index. upper_bound = n.
IndependenceResult greedy_lower_bound(const Graph& g);

/// Branch and bound for a maximum clique of complement(g), bounded by greedy
/// sequential colouring of the candidate set. Exact when it finishes inside
/// the budget; otherwise returns the incumbent and the best proven bound.
IndependenceResult max_independent_set(const Graph& g, const SearchBudget& budget = {});

bool is_independent(const Graph& g, std::span<const Vertex> vertices);

}  // namespace ctxw
