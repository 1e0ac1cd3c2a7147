#pragma once

#include <cstddef>
#include <map>

#include "ctxw/graph.hpp"
#include "ctxw/linalg.hpp"

namespace ctxw {

struct ThetaConfig {
    /// Target for upper_bound - lower_bound.
    double tolerance = 1e-4;
    std::size_t max_iterations = 50000;
    /// Initial penalty of the splitting iteration; adapted as it runs.
    double step_parameter = 1.0;
    /// Penalty is doubled or halved when one residual exceeds the other by
    /// this factor.
    double residual_balance_factor = 10.0;
    double eig_tolerance = 1e-10;
    /// Iterations between certification attempts once the residuals have not
    /// yet reached the stopping threshold.
    std::size_t certify_interval = 200;
    /// Subgradient steps spent polishing the dual certificate per attempt.
    std::size_t dual_polish_steps = 20;
};

/// Throws InputError unless every field is positive.
void validate(const ThetaConfig& cfg);

/// Certified bracket on the Lovasz number.
///
/// `primal_matrix` is feasible for max <J, X> s.t. tr X = 1, X_ij = 0 on
/// edges, X PSD, and lower_bound = <J, primal_matrix>. `dual_certificate` has
/// ones on the diagonal and on every non-edge, and upper_bound is its largest
/// eigenvalue. Both bounds can be recomputed from the matrices with
/// certify_lower() and certify_upper().
struct ThetaResult {
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    Matrix primal_matrix;
    Matrix dual_certificate;
    std::size_t iterations = 0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    /// False when max_iterations ran out with the gap above tolerance; the
    /// bracket is still valid, only wider.
    bool converged = false;

    double gap() const noexcept { return upper_bound - lower_bound; }
};

/// Operator splitting between the affine constraint set and the PSD cone,
/// followed by certification of both sides.
ThetaResult solve_theta(const Graph& g, const ThetaConfig& cfg = {});

/// Turns any symmetric matrix with positive trace (after edge entries are
/// zeroed) into a feasible primal point: zero edges, rescale to unit trace,
/// then mix with I/n just enough to clear negative eigenvalues.
Matrix certified_primal(const Graph& g, const Matrix& x);

/// <J, certified_primal(g, x)>, a lower bound on theta(g).
double certify_lower(const Graph& g, const Matrix& x);

using EdgeValues = std::map<Edge, double>;

/// The matrix with ones on the diagonal and non-edges and the given values on
/// edges (keys are normalised to u < v; missing edges get 0).
Matrix dual_matrix(const Graph& g, const EdgeValues& edge_values);

/// lambda_max(dual_matrix(g, edge_values)), an upper bound on theta(g).
/// Throws InputError if a key is not an edge of g.
double certify_upper(const Graph& g, const EdgeValues& edge_values);

/// Upper bound from a full dual matrix. Throws InputError unless the
/// matrix is symmetric with ones on the diagonal and on every non-edge.
double certify_upper(const Graph& g, const Matrix& dual);

/// Reads the edge entries of a dual matrix back out.
EdgeValues edge_values_of(const Graph& g, const Matrix& dual);

}  // namespace ctxw
