#include <doctest.h>

#include "ctxw/error.hpp"
#include "ctxw/linalg.hpp"
#include "ctxw/rng.hpp"
#include "oracles.hpp"

using namespace ctxw;

namespace {

Matrix random_symmetric(Eigen::Index n, std::uint64_t seed) {
    Rng rng(seed);
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j <= i; ++j) m(i, j) = m(j, i) = 2.0 * rng.uniform() - 1.0;
    return m;
}

}  // namespace

TEST_CASE("eigenvalue examples") {
    auto e = symmetric_eig(Matrix::Identity(3, 3));
    CHECK(e.values.isApprox(Vector::Ones(3)));

    Matrix d = Matrix::Zero(3, 3);
    d.diagonal() << 3, 1, 2;
    e = symmetric_eig(d);
    CHECK(e.values[0] == doctest::Approx(3));
    CHECK(e.values[1] == doctest::Approx(2));
    CHECK(e.values[2] == doctest::Approx(1));

    e = symmetric_eig(Matrix::Ones(4, 4));
    CHECK(e.values[0] == doctest::Approx(4));
    for (int k = 1; k < 4; ++k) CHECK(std::abs(e.values[k]) < 1e-14);
}

TEST_CASE("asymmetric input is rejected") {
    Matrix m = Matrix::Identity(3, 3);
    m(0, 1) = 1e-6;
    CHECK_THROWS_AS(symmetric_eig(m), InputError);
    CHECK_THROWS_AS(symmetric_eig(Matrix::Zero(2, 3)), InputError);
    CHECK_FALSE(is_symmetric(m));
}

TEST_CASE("decomposition matches the Jacobi oracle and reconstructs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto n = static_cast<Eigen::Index>(2 + seed * 3);
        const Matrix m = random_symmetric(n, seed);
        const auto e = symmetric_eig(m);
        const Vector reference = oracle::jacobi_eigenvalues(m);
        CHECK((e.values - reference).cwiseAbs().maxCoeff() < 1e-11);
        for (Eigen::Index k = 1; k < n; ++k) CHECK(e.values[k] <= e.values[k - 1]);
        const Matrix rebuilt = e.vectors * e.values.asDiagonal() * e.vectors.transpose();
        CHECK((m - rebuilt).norm() <= 1e-10 * m.norm());
        const Matrix gram = e.vectors.transpose() * e.vectors;
        CHECK((gram - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-10);
        CHECK((symmetric_eigenvalues(m) - e.values).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("decomposition is deterministic") {
    const Matrix m = random_symmetric(40, 3);
    const auto a = symmetric_eig(m);
    const auto b = symmetric_eig(m);
    CHECK(a.values == b.values);
    CHECK(a.vectors == b.vectors);
}

TEST_CASE("solver handles heavily degenerate spectra") {
    // Johnson-scheme matrices have only a handful of distinct eigenvalues.
    for (int s : {1, 2, 3}) {
        const auto g = intersection_family({4, s});
        const auto n = static_cast<Eigen::Index>(g.order());
        Matrix m = Matrix::Ones(n, n);
        for (auto [u, v] : g.edges()) m(u, v) = m(v, u) = -0.3;
        SymmetricSolver solver(n);
        solver.compute(m);
        const Vector reference = oracle::jacobi_eigenvalues(m);
        CHECK((solver.eigenvalues().reverse() - reference).cwiseAbs().maxCoeff() < 1e-10);
        const Matrix& v = solver.eigenvectors();
        CHECK((m - v * solver.eigenvalues().asDiagonal() * v.transpose()).norm() <= 1e-10 * m.norm());
    }
}
