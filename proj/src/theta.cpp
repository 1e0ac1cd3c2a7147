#include "ctxw/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "ctxw/error.hpp"

namespace ctxw {

namespace {

void zero_edges(Matrix& m, const std::vector<Edge>& edges) {
    for (auto [u, v] : edges) {
        m(u, v) = 0.0;
        m(v, u) = 0.0;
    }
}

void symmetrize(Matrix& m) { m = (0.5 * (m + m.transpose())).eval(); }

// Frobenius projection onto {tr X = 1, X_ij = 0 on edges}. The constraints
// touch disjoint coordinates, so the projection splits.
void project_affine(Matrix& m, const std::vector<Edge>& edges) {
    zero_edges(m, edges);
    const auto n = static_cast<double>(m.rows());
    m.diagonal().array() += (1.0 - m.trace()) / n;
}

class PsdProjector {
public:
    explicit PsdProjector(Eigen::Index n) : solver_(n) {}

    void project(const Matrix& in, Matrix& out) {
        solver_.compute(in);
        const auto& w = solver_.eigenvalues();
        const auto& v = solver_.eigenvectors();
        const Eigen::Index n = in.rows();
        Eigen::Index first_positive = 0;
        while (first_positive < n && w[first_positive] <= 0.0) ++first_positive;
        const Eigen::Index positives = n - first_positive;
        if (positives <= n / 2) {
            Matrix scaled = v.rightCols(positives) * w.tail(positives).cwiseSqrt().asDiagonal();
            out.noalias() = scaled * scaled.transpose();
        } else {
            Matrix scaled = v.leftCols(first_positive) * (-w.head(first_positive)).cwiseSqrt().asDiagonal();
            out = in;
            out.noalias() += scaled * scaled.transpose();
        }
        symmetrize(out);
    }

private:
    SymmetricSolver solver_;
};

struct DualPoint {
    double bound = std::numeric_limits<double>::infinity();
    Matrix matrix;
};

// Lowers lambda_max of `b` by moving only its edge entries. Steps follow the
// averaged gradient of the top eigenspace with a Polyak step aimed at
// `target`; a step is kept only if it lowers the bound.
DualPoint polish_dual(Matrix b, const std::vector<Edge>& edges, double target, std::size_t steps) {
    SymmetricSolver solver(b.rows());
    DualPoint best;
    best.matrix = b;
    solver.compute(b);
    best.bound = solver.eigenvalues().maxCoeff();
    if (edges.empty()) return best;
    double scale = 1.0;
    for (std::size_t k = 0; k < steps; ++k) {
        const auto& w = solver.eigenvalues();
        const auto& v = solver.eigenvectors();
        const Eigen::Index n = b.rows();
        const double top = w[n - 1];
        const double band = 1e-6 * std::max(1.0, std::abs(top));
        Eigen::Index cluster = 1;
        while (cluster < n && w[n - 1 - cluster] >= top - band) ++cluster;
        std::vector<double> grad(edges.size());
        double norm2 = 0.0;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto [i, j] = edges[e];
            double gij = 0.0;
            for (Eigen::Index c = 0; c < cluster; ++c) gij += v(i, n - 1 - c) * v(j, n - 1 - c);
            grad[e] = 2.0 * gij / static_cast<double>(cluster);
            norm2 += 2.0 * grad[e] * grad[e];
        }
        if (norm2 < 1e-30 || best.bound - target <= 0.0) break;
        const double step = scale * (best.bound - target) / norm2;
        Matrix trial = best.matrix;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto [i, j] = edges[e];
            trial(i, j) -= step * grad[e];
            trial(j, i) = trial(i, j);
        }
        SymmetricSolver trial_solver(trial.rows());
        trial_solver.compute(trial);
        const double bound = trial_solver.eigenvalues().maxCoeff();
        if (bound < best.bound) {
            best.bound = bound;
            best.matrix = std::move(trial);
            solver = std::move(trial_solver);
            scale = std::min(1.0, scale * 2.0);
        } else {
            scale *= 0.25;
        }
    }
    return best;
}

constexpr std::size_t kRecertifyGap = 25;
constexpr std::size_t kBalanceInterval = 25;

struct PrimalPoint {
    double bound = -std::numeric_limits<double>::infinity();
    Matrix matrix;
};

ThetaResult exact_result(const Graph& g, Matrix primal) {
    ThetaResult r;
    r.primal_matrix = certified_primal(g, primal);
    r.lower_bound = r.primal_matrix.sum();
    r.dual_certificate = dual_matrix(g, {});
    r.upper_bound = certify_upper(g, r.dual_certificate);
    r.converged = true;
    return r;
}

}  // namespace

void validate(const ThetaConfig& cfg) {
    if (!(cfg.tolerance > 0.0) || cfg.max_iterations == 0 || !(cfg.step_parameter > 0.0) ||
        !(cfg.residual_balance_factor > 0.0) || !(cfg.eig_tolerance > 0.0) || cfg.certify_interval == 0)
        throw InputError("theta configuration values must all be positive");
}

Matrix certified_primal(const Graph& g, const Matrix& x) {
    const auto n = static_cast<Eigen::Index>(g.order());
    if (x.rows() != n || x.cols() != n)
        throw InputError(fmt::format("primal matrix is {}x{}, graph has {} vertices", x.rows(), x.cols(), n));
    if (!is_symmetric(x, 1e-9)) throw InputError("primal matrix is not symmetric");
    Matrix y = x;
    symmetrize(y);
    zero_edges(y, g.edges());
    const double tr = y.trace();
    if (!(tr > 0.0)) throw InputError("primal matrix has non-positive trace after zeroing edge entries");
    y /= tr;
    const double lambda_min = symmetric_eigenvalues(y, 1e-9).minCoeff();
    const double mu = std::max(0.0, -lambda_min);
    if (mu > 0.0) {
        y.diagonal().array() += mu;
        y /= 1.0 + static_cast<double>(n) * mu;
    }
    return y;
}

double certify_lower(const Graph& g, const Matrix& x) { return certified_primal(g, x).sum(); }

Matrix dual_matrix(const Graph& g, const EdgeValues& edge_values) {
    const auto n = static_cast<Eigen::Index>(g.order());
    Matrix b = Matrix::Ones(n, n);
    for (auto [u, v] : g.edges()) b(u, v) = b(v, u) = 0.0;
    for (auto [key, value] : edge_values) {
        auto [u, v] = key;
        if (u >= g.order() || v >= g.order() || u == v || !g.adjacent(u, v))
            throw InputError(fmt::format("({}, {}) is not an edge; dual values live on edges only", u, v));
        b(u, v) = b(v, u) = value;
    }
    return b;
}

double certify_upper(const Graph& g, const EdgeValues& edge_values) {
    return symmetric_eigenvalues(dual_matrix(g, edge_values)).maxCoeff();
}

double certify_upper(const Graph& g, const Matrix& dual) {
    const auto n = static_cast<Eigen::Index>(g.order());
    if (dual.rows() != n || dual.cols() != n) throw InputError("dual matrix size does not match graph");
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            if (dual(i, j) != dual(j, i)) throw InputError("dual matrix is not symmetric");
            const bool fixed = i == j || !g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j));
            if (fixed && dual(i, j) != 1.0)
                throw InputError(fmt::format("dual matrix entry ({}, {}) must be 1", i, j));
        }
    return symmetric_eigenvalues(dual).maxCoeff();
}

EdgeValues edge_values_of(const Graph& g, const Matrix& dual) {
    EdgeValues out;
    for (auto e : g.edges()) out.emplace(e, dual(e.first, e.second));
    return out;
}

ThetaResult solve_theta(const Graph& g, const ThetaConfig& cfg) {
    validate(cfg);
    const auto n = static_cast<Eigen::Index>(g.order());
    if (n == 0) throw InputError("theta needs at least one vertex");
    if (g.is_edgeless()) return exact_result(g, Matrix::Ones(n, n) / static_cast<double>(n));
    if (g.is_complete()) return exact_result(g, Matrix::Identity(n, n) / static_cast<double>(n));

    const auto edges = g.edges();
    const double stop_residual = 1e-8 * static_cast<double>(n);
    double rho = cfg.step_parameter;

    Matrix z = Matrix::Identity(n, n) / static_cast<double>(n);
    Matrix u = Matrix::Zero(n, n);
    Matrix x(n, n), z_prev(n, n), work(n, n);
    PsdProjector psd(n);

    // I/n is always feasible and certifies theta >= 1.
    PrimalPoint best_primal{1.0, Matrix::Identity(n, n) / static_cast<double>(n)};
    DualPoint best_dual;
    ThetaResult r;

    auto certify = [&] {
        Matrix trimmed = z;
        zero_edges(trimmed, edges);
        if (trimmed.trace() > 0.0) {
            Matrix primal = certified_primal(g, trimmed);
            const double lb = primal.sum();
            if (lb > best_primal.bound) {
                best_primal.bound = lb;
                best_primal.matrix = std::move(primal);
            }
        }
        Matrix seed = Matrix::Ones(n, n);
        for (auto [i, j] : edges) seed(i, j) = seed(j, i) = rho * 0.5 * (u(i, j) + u(j, i));
        DualPoint d = polish_dual(std::move(seed), edges, best_primal.bound, cfg.dual_polish_steps);
        if (d.bound < best_dual.bound) best_dual = std::move(d);
        return best_dual.bound - best_primal.bound <= cfg.tolerance;
    };

    bool done = false;
    std::size_t last_certify = 0;
    std::size_t it = 0;
    while (it < cfg.max_iterations && !done) {
        ++it;
        work = z - u;
        work.array() += 1.0 / rho;
        x = work;
        project_affine(x, edges);

        z_prev = z;
        work = x + u;
        psd.project(work, z);
        u += x - z;

        r.primal_residual = (x - z).norm();
        r.dual_residual = rho * (z - z_prev).norm();

        // Certify as soon as both residuals are small, then at most every
        // kRecertifyGap iterations while the certified gap is still too wide.
        const bool small = r.primal_residual <= stop_residual && r.dual_residual <= stop_residual;
        const std::size_t since = it - last_certify;
        if ((small && (last_certify == 0 || since >= kRecertifyGap)) || since >= cfg.certify_interval) {
            done = certify();
            last_certify = it;
        }

        if (it % kBalanceInterval != 0) continue;
        if (r.primal_residual > cfg.residual_balance_factor * r.dual_residual) {
            rho *= 2.0;
            u /= 2.0;
        } else if (r.dual_residual > cfg.residual_balance_factor * r.primal_residual) {
            rho /= 2.0;
            u *= 2.0;
        }
    }
    if (!done) done = certify();

    r.iterations = it;
    r.converged = done;
    r.lower_bound = best_primal.bound;
    r.upper_bound = best_dual.bound;
    r.primal_matrix = std::move(best_primal.matrix);
    r.dual_certificate = std::move(best_dual.matrix);
    if (!(r.lower_bound <= r.upper_bound + 1e-9 * std::max(1.0, r.upper_bound)))
        throw InvariantError(fmt::format("certified bounds crossed: {} > {}", r.lower_bound, r.upper_bound));
    return r;
}

}  // namespace ctxw
