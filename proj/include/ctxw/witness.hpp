#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ctxw/graph.hpp"
#include "ctxw/independence.hpp"
#include "ctxw/theta.hpp"

namespace ctxw {

/// theta_lb must exceed alpha_ub by more than this to count as a witness.
inline constexpr double kWitnessMargin = 1e-6;

/// Noncontextual (alpha) versus quantum (theta) maximum of the witness sum
/// built from an exclusivity graph, using certified brackets only.
struct WitnessReport {
    std::size_t n = 0;
    int alpha_lb = 0;
    int alpha_ub = 0;
    bool alpha_exact = false;
    double theta_lb = 0.0;
    double theta_ub = 0.0;
    bool theta_converged = false;
    double ratio_lb = 0.0;  ///< theta_lb / alpha_ub
    double ratio_ub = 0.0;  ///< theta_ub / alpha_lb
    bool is_witness = false;
    double amc_fraction = 0.0;      ///< ratio_lb / n
    double predicted_profit = 0.0;  ///< ratio_lb - 1, per unit stake per round
};

WitnessReport make_witness_report(std::size_t n, const IndependenceResult& alpha, const ThetaResult& theta);
WitnessReport witness_report(const Graph& g, const ThetaConfig& theta_cfg = {}, const SearchBudget& alpha_budget = {});

/// theta(G) <= M_k n^(1 - 2/k) for graphs with alpha(G) < k. Only k = 3 has a
/// known constant, M_3 = 2^(2/3).
struct BoundCheck {
    int k = 3;
    double m_k = 0.0;
    double bound = 0.0;
    double theta_ub = 0.0;
    bool satisfied = false;
    double slack = 0.0;  ///< bound - theta_ub
};

/// Throws UnsupportedError for k != 3 and PreconditionError unless the exact
/// alpha(g) is below k.
BoundCheck check_small_alpha_bound(const Graph& g, int k, const ThetaConfig& theta_cfg = {},
                                   const SearchBudget& alpha_budget = {});

// ---------------------------------------------------------------------------
// Exhaustive scan over labelled graphs.

/// Pairs (u, v), u < v, in lexicographic order; bit k of an edge mask
/// selects pair k.
std::vector<Edge> vertex_pairs(std::size_t n);
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

/// Ratios within this of the maximum count as ties; ties go to the lowest mask.
inline constexpr double kScanTieTolerance = 1e-6;
inline constexpr std::size_t kScanMaxOrder = 7;
/// n = 7 means 2^21 graphs and needs allow_long_run.
inline constexpr std::size_t kScanLongRunOrder = 7;

struct ScanRow {
    std::uint64_t edge_mask = 0;
    int alpha = 0;
    double theta_lb = 0.0;
    double theta_ub = 0.0;
    double ratio_lb = 0.0;
};

struct ScanOptions {
    unsigned workers = 1;
    bool allow_long_run = false;
    /// Receives every evaluated graph in increasing mask order. Graphs pruned
    /// by the ratio bound are not reported.
    std::function<void(const ScanRow&)> on_row;
};

struct ScanResult {
    std::size_t n = 0;
    double max_ratio = 0.0;
    std::uint64_t argmax_mask = 0;
    Graph argmax;
    std::uint64_t graphs = 0;
    std::uint64_t settled_by_clique_cover = 0;  ///< alpha equals clique cover number
    std::uint64_t pruned = 0;
    std::uint64_t solved = 0;
};

/// Maximum certified theta/alpha over every labelled graph on n vertices.
/// Exact alpha by brute force; the SDP is skipped when alpha equals the
/// clique cover number (then theta = alpha) or when cover/alpha cannot beat
/// the running maximum. Result is independent of the worker count.
ScanResult exhaustive_ratio_scan(std::size_t n, const ThetaConfig& theta_cfg = {}, const ScanOptions& options = {});

/// Smallest number of cliques covering all vertices; n <= 16.
int clique_cover_number(const Graph& g);

// ---------------------------------------------------------------------------
// G(q,s) table.

struct ReferenceEntry {
    int q = 0;
    int s = 0;
    std::size_t n = 0;
    int alpha = 0;
    bool alpha_is_lower_bound = false;
    double theta = 0.0;
};

/// The published G(q,s) values for 2 <= q <= 5.
const std::vector<ReferenceEntry>& reference_table();

/// Comparison tolerances for the table, in one place.
struct TablePolicy {
    double theta_rel_tol = 1e-3;        ///< q <= 4
    double theta_rel_tol_large = 5e-3;  ///< q = 5 (two-decimal printed values)
    /// The printed theta for (4,1) is 23, but the two-value representation
    /// certifies 70/3; the certified bracket must contain this target.
    double q4s1_theta_target = 70.0 / 3.0;
    double q4s1_window = 0.05;
};

enum class CheckStatus { Pass, Fail, StretchMet, StretchMissed };
std::string to_string(CheckStatus s);

struct TableRow {
    ReferenceEntry reference;
    IndependenceResult alpha;
    ThetaResult theta;
    std::optional<double> two_value;
    CheckStatus alpha_check = CheckStatus::Fail;
    CheckStatus theta_check = CheckStatus::Fail;
    std::string note;

    bool blocking_pass() const {
        return alpha_check != CheckStatus::Fail && theta_check != CheckStatus::Fail;
    }
};

struct TableOptions {
    ThetaConfig theta;
    /// Used for q <= 4, where alpha must come out exact.
    SearchBudget alpha_budget;
    /// Used for q = 5, where only the published lower bounds are compared.
    SearchBudget stretch_budget{std::chrono::duration<double>(60.0), std::nullopt, std::nullopt};
    TablePolicy policy;
    int max_q = 5;
    /// Called as each row finishes.
    std::function<void(const TableRow&)> on_row;
};

std::vector<TableRow> reproduce_table(const TableOptions& options = {});

}  // namespace ctxw
