#pragma once

#include <cstddef>

#include "ctxw/graph.hpp"
#include "ctxw/linalg.hpp"
#include "ctxw/theta.hpp"

namespace ctxw {

/// A quantum realisation of the witness: one unit vector per vertex (the
/// rank-one projectors), orthogonal on every edge, plus the handle state.
/// probabilities[i] = <handle, vector_i>^2 and value is their sum.
struct OrthonormalRepresentation {
    std::size_t dimension = 0;
    Matrix vectors;  ///< dimension x n, column i belongs to vertex i
    Vector handle;
    Vector probabilities;
    double value = 0.0;
};

/// Eigenvalues at or below this are dropped when factoring the primal matrix.
inline constexpr double kRankCutoff = 1e-9;

/// Factors the certified primal matrix X = B^T B and normalises the columns of
/// B; the handle is the normalised column sum. A vertex whose column has norm
/// below kRankCutoff is given its own fresh axis (probability 0).
/// Throws InputError if the primal matrix is not feasible for g.
OrthonormalRepresentation extract_representation(const Graph& g, const ThetaResult& theta);

/// Closed-form representation of G(q,s) in dimension 2q: vertex S has entry a
/// on the coordinates in S and 1 elsewhere, where a is the larger root of
/// s a^2 + 2 (q - s) a + s = 0; the handle is uniform. Needs q >= 2s for a
/// real root; otherwise throws UnsupportedError.
OrthonormalRepresentation two_value_representation(SubsetFamilySpec spec);

/// The root a used above.
double two_value_coefficient(SubsetFamilySpec spec);

struct ValidationReport {
    double max_norm_error = 0.0;       ///< over vectors and the handle
    double max_edge_overlap = 0.0;     ///< max |<v_i, v_j>| over edges
    double max_probability_error = 0.0;///< stored vs recomputed, plus range violations
    double value_error = 0.0;          ///< |value - sum of stored probabilities|
    bool passed = false;
};

/// Throws InputError when the representation does not have one vector per
/// vertex or the handle's dimension differs from the vectors'.
ValidationReport validate_representation(const Graph& g, const OrthonormalRepresentation& rep, double tol);

}  // namespace ctxw
