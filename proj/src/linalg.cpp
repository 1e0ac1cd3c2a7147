#include "ctxw/linalg.hpp"

#include <fmt/format.h>

#include "ctxw/error.hpp"
#include "ctxw/rng.hpp"

namespace ctxw {

namespace {

void require_symmetric(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) throw InputError(fmt::format("matrix is {}x{}, not square", m.rows(), m.cols()));
    if (!is_symmetric(m, tol)) throw InputError("matrix is not symmetric");
}

constexpr int kMaxRetries = 4;

Matrix random_orthogonal(Eigen::Index n, std::uint64_t seed) {
    Rng rng(seed);
    Matrix a(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i) a(i, j) = 2.0 * rng.uniform() - 1.0;
    Eigen::HouseholderQR<Matrix> qr(a);
    return qr.householderQ();
}

}  // namespace

SymmetricSolver& SymmetricSolver::compute(const Matrix& m, bool with_vectors) {
    const int options = with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly;
    rotated_ = false;
    retries_ = 0;
    solver_.compute(m, options);
    while (solver_.info() != Eigen::Success) {
        if (++retries_ > kMaxRetries) throw InvariantError("symmetric eigensolver did not converge");
        const Matrix q = random_orthogonal(m.rows(), 0x5eed0000u + static_cast<std::uint64_t>(retries_));
        Matrix conj = q.transpose() * m * q;
        conj = (0.5 * (conj + conj.transpose())).eval();
        solver_.compute(conj, options);
        rotated_ = with_vectors;
        if (rotated_ && solver_.info() == Eigen::Success) vectors_ = q * solver_.eigenvectors();
    }
    return *this;
}

bool is_symmetric(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    if (m.size() == 0) return true;
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    return (m - m.transpose()).cwiseAbs().maxCoeff() <= tol * scale;
}

EigenDecomposition symmetric_eig(const Matrix& m, double symmetry_tol) {
    require_symmetric(m, symmetry_tol);
    SymmetricSolver solver(m.rows());
    solver.compute(m, true);
    // Eigen returns ascending order.
    EigenDecomposition out;
    out.values = solver.eigenvalues().reverse();
    out.vectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

Vector symmetric_eigenvalues(const Matrix& m, double symmetry_tol) {
    require_symmetric(m, symmetry_tol);
    SymmetricSolver solver(m.rows());
    solver.compute(m, false);
    return solver.eigenvalues().reverse();
}

}  // namespace ctxw
