#include "ctxw/representation.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "ctxw/error.hpp"

namespace ctxw {

namespace {

void fill_probabilities(OrthonormalRepresentation& rep) {
    rep.probabilities = (rep.vectors.transpose() * rep.handle).array().square().matrix();
    rep.value = rep.probabilities.sum();
}

void require_feasible(const Graph& g, const Matrix& x) {
    const auto n = static_cast<Eigen::Index>(g.order());
    if (x.rows() != n || x.cols() != n) throw InputError("primal matrix size does not match graph");
    if (!is_symmetric(x, 1e-12)) throw InputError("primal matrix is not symmetric");
    if (std::abs(x.trace() - 1.0) > 1e-9) throw InputError(fmt::format("primal trace is {}, not 1", x.trace()));
    for (auto [u, v] : g.edges())
        if (std::abs(x(u, v)) > 1e-9) throw InputError(fmt::format("primal entry on edge ({}, {}) is nonzero", u, v));
}

}  // namespace

OrthonormalRepresentation extract_representation(const Graph& g, const ThetaResult& theta) {
    const Matrix& x = theta.primal_matrix;
    require_feasible(g, x);
    const auto n = x.rows();
    const auto eig = symmetric_eig(x);
    if (eig.values[n - 1] < -1e-9) throw InputError("primal matrix is not positive semidefinite");

    Eigen::Index rank = 0;
    while (rank < n && eig.values[rank] > kRankCutoff) ++rank;
    // Column i of factor is b_i, with factor^T factor = X restricted to the
    // kept spectrum.
    Matrix factor = eig.values.head(rank).cwiseSqrt().asDiagonal() * eig.vectors.leftCols(rank).transpose();

    std::vector<Eigen::Index> zero_columns;
    for (Eigen::Index i = 0; i < n; ++i)
        if (factor.col(i).norm() < kRankCutoff) zero_columns.push_back(i);

    OrthonormalRepresentation rep;
    rep.dimension = static_cast<std::size_t>(rank) + zero_columns.size();
    const auto dim = static_cast<Eigen::Index>(rep.dimension);
    rep.vectors = Matrix::Zero(dim, n);
    rep.vectors.topRows(rank) = factor;
    Vector sum = factor.rowwise().sum();
    rep.handle = Vector::Zero(dim);
    rep.handle.head(rank) = sum / sum.norm();
    for (std::size_t k = 0; k < zero_columns.size(); ++k) {
        const auto i = zero_columns[k];
        rep.vectors.col(i).setZero();
        rep.vectors(rank + static_cast<Eigen::Index>(k), i) = 1.0;
    }
    for (Eigen::Index i = 0; i < n; ++i) rep.vectors.col(i).normalize();
    fill_probabilities(rep);
    return rep;
}

double two_value_coefficient(SubsetFamilySpec spec) {
    if (!(spec.q > spec.s && spec.s > 0))
        throw InputError(fmt::format("G(q,s) needs q > s > 0, got q={} s={}", spec.q, spec.s));
    if (spec.q < 2 * spec.s)
        throw UnsupportedError(fmt::format(
            "no real two-value representation for q={} s={} (needs q >= 2s)", spec.q, spec.s));
    const double q = spec.q, s = spec.s;
    const double half_b = q - s;
    return (-half_b + std::sqrt(half_b * half_b - s * s)) / s;
}

OrthonormalRepresentation two_value_representation(SubsetFamilySpec spec) {
    const double a = two_value_coefficient(spec);
    const auto subsets = subset_family_vertices(spec.q);
    const auto dim = static_cast<Eigen::Index>(2 * spec.q);
    const auto n = static_cast<Eigen::Index>(subsets.size());

    OrthonormalRepresentation rep;
    rep.dimension = static_cast<std::size_t>(dim);
    rep.vectors = Matrix::Ones(dim, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (int x : subsets[static_cast<std::size_t>(i)]) rep.vectors(x - 1, i) = a;
    rep.vectors /= std::sqrt(spec.q * (a * a + 1.0));
    rep.handle = Vector::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
    fill_probabilities(rep);
    return rep;
}

ValidationReport validate_representation(const Graph& g, const OrthonormalRepresentation& rep, double tol) {
    const auto n = static_cast<Eigen::Index>(g.order());
    if (rep.vectors.cols() != n)
        throw InputError(fmt::format("representation has {} vectors, graph has {} vertices", rep.vectors.cols(), n));
    if (rep.handle.size() != rep.vectors.rows() || rep.probabilities.size() != n)
        throw InputError("representation handle/probability sizes are inconsistent");

    ValidationReport r;
    r.max_norm_error = std::abs(rep.handle.norm() - 1.0);
    for (Eigen::Index i = 0; i < n; ++i)
        r.max_norm_error = std::max(r.max_norm_error, std::abs(rep.vectors.col(i).norm() - 1.0));
    for (auto [u, v] : g.edges())
        r.max_edge_overlap = std::max(r.max_edge_overlap, std::abs(rep.vectors.col(u).dot(rep.vectors.col(v))));
    for (Eigen::Index i = 0; i < n; ++i) {
        const double p = rep.probabilities[i];
        const double overlap = rep.handle.dot(rep.vectors.col(i));
        double err = std::abs(p - overlap * overlap);
        if (p < 0.0) err = std::max(err, -p);
        if (p > 1.0) err = std::max(err, p - 1.0);
        r.max_probability_error = std::max(r.max_probability_error, err);
    }
    r.value_error = std::abs(rep.value - rep.probabilities.sum());
    r.passed = r.max_norm_error <= tol && r.max_edge_overlap <= tol && r.max_probability_error <= tol &&
               r.value_error <= tol;
    return r;
}

}  // namespace ctxw
