#include "ctxw/witness.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include <fmt/format.h>

#include "ctxw/error.hpp"
#include "ctxw/representation.hpp"

namespace ctxw {

WitnessReport make_witness_report(std::size_t n, const IndependenceResult& alpha, const ThetaResult& theta) {
    if (alpha.lower_bound < 1 || alpha.upper_bound < alpha.lower_bound)
        throw InvariantError("independence bracket is empty or below 1");
    if (alpha.lower_bound > theta.upper_bound + kWitnessMargin)
        throw InvariantError(fmt::format("alpha >= {} exceeds certified theta <= {}", alpha.lower_bound, theta.upper_bound));
    WitnessReport r;
    r.n = n;
    r.alpha_lb = alpha.lower_bound;
    r.alpha_ub = alpha.upper_bound;
    r.alpha_exact = alpha.exact;
    r.theta_lb = theta.lower_bound;
    r.theta_ub = theta.upper_bound;
    r.theta_converged = theta.converged;
    r.ratio_lb = theta.lower_bound / alpha.upper_bound;
    r.ratio_ub = theta.upper_bound / alpha.lower_bound;
    r.is_witness = theta.lower_bound > alpha.upper_bound + kWitnessMargin;
    r.amc_fraction = r.ratio_lb / static_cast<double>(n);
    r.predicted_profit = r.ratio_lb - 1.0;
    return r;
}

WitnessReport witness_report(const Graph& g, const ThetaConfig& theta_cfg, const SearchBudget& alpha_budget) {
    if (g.order() == 0) throw InputError("witness report needs at least one vertex");
    const auto alpha = max_independent_set(g, alpha_budget);
    const auto theta = solve_theta(g, theta_cfg);
    return make_witness_report(g.order(), alpha, theta);
}

BoundCheck check_small_alpha_bound(const Graph& g, int k, const ThetaConfig& theta_cfg, const SearchBudget& alpha_budget) {
    if (k != 3) throw UnsupportedError(fmt::format("no constant M_k is known for k = {}; only k = 3 is supported", k));
    const auto alpha = max_independent_set(g, alpha_budget);
    if (!alpha.exact) throw PreconditionError("alpha could not be determined exactly within the budget");
    if (alpha.lower_bound >= k)
        throw PreconditionError(fmt::format("bound needs alpha < {}, graph has alpha = {}", k, alpha.lower_bound));
    const auto theta = solve_theta(g, theta_cfg);
    BoundCheck c;
    c.k = k;
    c.m_k = std::cbrt(4.0);  // 2^(2/3)
    c.bound = c.m_k * std::pow(static_cast<double>(g.order()), 1.0 - 2.0 / k);
    c.theta_ub = theta.upper_bound;
    c.slack = c.bound - c.theta_ub;
    c.satisfied = c.theta_ub <= c.bound + 1e-9;
    return c;
}

// ---------------------------------------------------------------------------

std::vector<Edge> vertex_pairs(std::size_t n) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
    const auto pairs = vertex_pairs(n);
    if (pairs.size() < 64 && (mask >> pairs.size()) != 0) throw InputError("edge mask has bits beyond the vertex pairs");
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if ((mask >> k) & 1u) edges.push_back(pairs[k]);
    return Graph(n, edges);
}

int clique_cover_number(const Graph& g) {
    const auto n = g.order();
    if (n > 16) throw InputError("clique cover number is limited to n <= 16");
    if (n == 0) return 0;
    const std::uint32_t full = (1u << n) - 1u;
    std::vector<std::uint32_t> adj(n, 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (g.adjacent(u, v)) adj[u] |= 1u << v;
    std::vector<char> is_clique(full + 1, 0);
    is_clique[0] = 1;
    for (std::uint32_t m = 1; m <= full; ++m) {
        const int v = std::countr_zero(m);
        const std::uint32_t rest = m & (m - 1);
        is_clique[m] = is_clique[rest] && (rest & ~adj[v]) == 0;
    }
    std::vector<int> cover(full + 1, 0);
    for (std::uint32_t m = 1; m <= full; ++m) {
        const std::uint32_t low = m & (~m + 1);
        const std::uint32_t others = m ^ low;
        int best = static_cast<int>(n);
        // Cliques containing the lowest vertex of m.
        for (std::uint32_t sub = others;; sub = (sub - 1) & others) {
            if (is_clique[sub | low]) best = std::min(best, 1 + cover[m ^ (sub | low)]);
            if (sub == 0) break;
        }
        cover[m] = best;
    }
    return cover[full];
}

namespace {

enum class ScanStatus { Settled, Solved, Pruned };

struct ScanEntry {
    ScanStatus status = ScanStatus::Pruned;
    ScanRow row;
};

ScanEntry evaluate_mask(std::size_t n, std::uint64_t mask, double best_so_far, const ThetaConfig& cfg) {
    const Graph g = graph_from_mask(n, mask);
    ScanEntry e;
    e.row.edge_mask = mask;
    const int alpha = brute_force_alpha(g);
    const int cover = clique_cover_number(g);
    e.row.alpha = alpha;
    // alpha <= theta <= clique cover number.
    if (alpha == cover) {
        e.status = ScanStatus::Settled;
        e.row.theta_lb = e.row.theta_ub = alpha;
        e.row.ratio_lb = 1.0;
        return e;
    }
    if (static_cast<double>(cover) / alpha < best_so_far - kScanTieTolerance) return e;
    const auto theta = solve_theta(g, cfg);
    e.status = ScanStatus::Solved;
    e.row.theta_lb = theta.lower_bound;
    e.row.theta_ub = theta.upper_bound;
    e.row.ratio_lb = theta.lower_bound / alpha;
    return e;
}

}  // namespace

ScanResult exhaustive_ratio_scan(std::size_t n, const ThetaConfig& theta_cfg, const ScanOptions& options) {
    if (n < 1) throw InputError("scan needs n >= 1");
    if (n > kScanMaxOrder) throw InputError(fmt::format("exhaustive scan is limited to n <= {}", kScanMaxOrder));
    if (n >= kScanLongRunOrder && !options.allow_long_run)
        throw InputError(fmt::format("n = {} enumerates 2^{} graphs; enable the long-run option", n, n * (n - 1) / 2));
    validate(theta_cfg);

    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    // Pruning inside a chunk only sees the maximum from earlier chunks, which
    // keeps the set of evaluated graphs independent of the worker count.
    constexpr std::uint64_t kChunk = 4096;
    const unsigned workers = std::max(1u, options.workers);

    ScanResult result;
    result.n = n;
    result.graphs = total;
    double best = 0.0;
    std::vector<ScanEntry> entries;
    std::vector<std::pair<double, std::uint64_t>> candidates;  // ratio, mask

    for (std::uint64_t lo = 0; lo < total; lo += kChunk) {
        const std::uint64_t hi = std::min(total, lo + kChunk);
        entries.assign(hi - lo, {});
        std::atomic<std::uint64_t> next{lo};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto work = [&] {
            try {
                for (auto m = next.fetch_add(1); m < hi; m = next.fetch_add(1))
                    entries[m - lo] = evaluate_mask(n, m, best, theta_cfg);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        };
        if (workers == 1) {
            work();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        }
        if (failure) std::rethrow_exception(failure);

        for (const auto& e : entries) {
            switch (e.status) {
                case ScanStatus::Settled: ++result.settled_by_clique_cover; break;
                case ScanStatus::Solved: ++result.solved; break;
                case ScanStatus::Pruned: ++result.pruned; continue;
            }
            if (options.on_row) options.on_row(e.row);
            best = std::max(best, e.row.ratio_lb);
            if (e.row.ratio_lb >= best - kScanTieTolerance) candidates.emplace_back(e.row.ratio_lb, e.row.edge_mask);
        }
        std::erase_if(candidates, [&](const auto& c) { return c.first < best - kScanTieTolerance; });
    }

    result.max_ratio = best;
    result.argmax_mask = candidates.front().second;
    for (const auto& c : candidates) result.argmax_mask = std::min(result.argmax_mask, c.second);
    result.argmax = graph_from_mask(n, result.argmax_mask);
    return result;
}

// ---------------------------------------------------------------------------

const std::vector<ReferenceEntry>& reference_table() {
    static const std::vector<ReferenceEntry> table = {
        {2, 1, 6, 2, false, 2.0},      {3, 1, 20, 4, false, 5.0},     {3, 2, 20, 4, false, 5.0},
        {4, 1, 70, 17, false, 23.0},   {4, 2, 70, 10, false, 10.0},   {4, 3, 70, 14, false, 14.0},
        {5, 1, 252, 55, true, 94.5},   {5, 2, 252, 27, true, 42.0},   {5, 3, 252, 12, true, 18.67},
        {5, 4, 252, 28, true, 42.0},
    };
    return table;
}

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::StretchMet: return "PASS(stretch)";
        case CheckStatus::StretchMissed: return "BELOW(stretch)";
    }
    return "?";
}

namespace {

bool within_relative(double value, double ref, double tol) { return std::abs(value - ref) <= tol * std::abs(ref); }

}  // namespace

std::vector<TableRow> reproduce_table(const TableOptions& options) {
    const auto& policy = options.policy;
    std::vector<TableRow> rows;
    for (const auto& ref : reference_table()) {
        if (ref.q > options.max_q) continue;
        TableRow row;
        row.reference = ref;
        const SubsetFamilySpec spec{ref.q, ref.s};
        const Graph g = intersection_family(spec);

        row.alpha = max_independent_set(g, ref.alpha_is_lower_bound ? options.stretch_budget : options.alpha_budget);
        row.theta = solve_theta(g, options.theta);
        if (ref.q >= 2 * ref.s) row.two_value = two_value_representation(spec).value;

        if (ref.alpha_is_lower_bound)
            row.alpha_check = row.alpha.lower_bound >= ref.alpha ? CheckStatus::StretchMet : CheckStatus::StretchMissed;
        else
            row.alpha_check = row.alpha.exact && row.alpha.lower_bound == ref.alpha ? CheckStatus::Pass : CheckStatus::Fail;

        const double lb = row.theta.lower_bound, ub = row.theta.upper_bound;
        bool theta_ok = false;
        if (ref.q == 4 && ref.s == 1) {
            const double t = policy.q4s1_theta_target;
            theta_ok = lb <= t + policy.q4s1_window && ub >= t - policy.q4s1_window;
            row.note = fmt::format("printed theta {} disagrees with certified [{:.6f}, {:.6f}] around 70/3 = {:.6f}",
                                   ref.theta, lb, ub, t);
        } else {
            const double tol = ref.q >= 5 ? policy.theta_rel_tol_large : policy.theta_rel_tol;
            theta_ok = within_relative(lb, ref.theta, tol) && within_relative(ub, ref.theta, tol);
        }
        row.theta_check = theta_ok ? CheckStatus::Pass : CheckStatus::Fail;
        if (g.order() != ref.n) {
            row.theta_check = CheckStatus::Fail;
            row.note = fmt::format("vertex count {} differs from {}", g.order(), ref.n);
        }
        if (options.on_row) options.on_row(row);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace ctxw
