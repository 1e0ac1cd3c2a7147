#pragma once

#include <Eigen/Dense>

namespace ctxw {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Eigenvalues in descending order; column k of `vectors` belongs to values[k].
struct EigenDecomposition {
    Vector values;
    Matrix vectors;
};

/// Eigen's SelfAdjointEigenSolver with a convergence check. When the
/// implicit QR stalls (it does on some highly degenerate matrices, e.g.
/// duals of Johnson-scheme graphs) the input is conjugated by a seeded
/// random orthogonal matrix and solved again. Ascending order, as Eigen.
class SymmetricSolver {
public:
    explicit SymmetricSolver(Eigen::Index n = 0) : solver_(n) {}

    /// Throws InvariantError if no attempt converges.
    SymmetricSolver& compute(const Matrix& m, bool with_vectors = true);

    const Vector& eigenvalues() const { return solver_.eigenvalues(); }
    const Matrix& eigenvectors() const { return rotated_ ? vectors_ : solver_.eigenvectors(); }
    /// Number of random conjugations the last compute() needed.
    int retries() const { return retries_; }

private:
    Eigen::SelfAdjointEigenSolver<Matrix> solver_;
    Matrix vectors_;
    bool rotated_ = false;
    int retries_ = 0;
};

/// max |M_ij - M_ji| <= tol * max(1, max |M_ij|)
bool is_symmetric(const Matrix& m, double tol = 1e-12);

/// Dense symmetric eigendecomposition (Householder tridiagonalisation plus
/// implicit symmetric QR). Throws InputError when `m` is not symmetric to
/// `symmetry_tol`. Output is a deterministic function of the input bits.
EigenDecomposition symmetric_eig(const Matrix& m, double symmetry_tol = 1e-12);

/// Eigenvalues only, descending.
Vector symmetric_eigenvalues(const Matrix& m, double symmetry_tol = 1e-12);

}  // namespace ctxw
