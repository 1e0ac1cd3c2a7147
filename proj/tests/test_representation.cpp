#include <doctest.h>

#include <cmath>

#include "ctxw/error.hpp"
#include "ctxw/independence.hpp"
#include "ctxw/representation.hpp"

using namespace ctxw;

TEST_CASE("pentagon representation from the SDP") {
    const auto g = cycle(5);
    const auto theta = solve_theta(g);
    const auto rep = extract_representation(g, theta);
    CHECK(rep.value == doctest::Approx(std::sqrt(5.0)).epsilon(1e-6));
    for (Eigen::Index i = 0; i < 5; ++i) CHECK(rep.probabilities[i] == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-5));
    CHECK(rep.dimension == 3);
    CHECK(validate_representation(g, rep, 1e-6).passed);
    CHECK(rep.value >= theta.lower_bound - 1e-6);
    CHECK(rep.value <= theta.upper_bound + 1e-6);
    CHECK(rep.value > 2.0);  // beats alpha(C5)
}

TEST_CASE("complete and edgeless representations") {
    auto g = complete(3);
    auto rep = extract_representation(g, solve_theta(g));
    CHECK(rep.value == doctest::Approx(1.0));
    CHECK(rep.dimension == 3);
    const Matrix gram = rep.vectors.transpose() * rep.vectors;
    CHECK((gram - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);

    g = edgeless(4);
    rep = extract_representation(g, solve_theta(g));
    CHECK(rep.value == doctest::Approx(4.0));
    CHECK(rep.dimension == 1);
    for (Eigen::Index i = 0; i < 4; ++i) CHECK(std::abs(rep.vectors.col(i).dot(rep.handle)) == doctest::Approx(1.0));
}

TEST_CASE("zero columns get fresh axes") {
    const Graph g(2, {{0, 1}});
    ThetaResult feasible;
    feasible.primal_matrix = Matrix::Zero(2, 2);
    feasible.primal_matrix(0, 0) = 1.0;
    const auto rep = extract_representation(g, feasible);
    CHECK(rep.dimension == 2);
    CHECK(rep.probabilities[0] == doctest::Approx(1.0));
    CHECK(rep.probabilities[1] == 0.0);
    CHECK(rep.value == doctest::Approx(1.0));
    CHECK(validate_representation(g, rep, 1e-12).passed);
}

TEST_CASE("infeasible primal is rejected") {
    const auto g = cycle(5);
    ThetaResult bad;
    bad.primal_matrix = Matrix::Ones(5, 5) / 5.0;  // nonzero on edges
    CHECK_THROWS_AS(extract_representation(g, bad), InputError);
    bad.primal_matrix = Matrix::Identity(5, 5);  // trace 5
    CHECK_THROWS_AS(extract_representation(g, bad), InputError);
    bad.primal_matrix = Matrix::Identity(4, 4) / 4.0;
    CHECK_THROWS_AS(extract_representation(g, bad), InputError);
}

TEST_CASE("two-value coefficient solves the orthogonality quadratic") {
    for (int q = 2; q <= 8; ++q)
        for (int s = 1; 2 * s <= q; ++s) {
            const double a = two_value_coefficient({q, s});
            CHECK(std::abs(s * a * a + 2.0 * (q - s) * a + s) < 1e-12);
            // Larger of the two roots (product of roots is 1, both negative).
            CHECK(a >= 1.0 / a - 1e-12);
        }
    CHECK(two_value_coefficient({3, 1}) == doctest::Approx(-2.0 + std::sqrt(3.0)));
    CHECK(two_value_coefficient({5, 1}) == doctest::Approx(-4.0 + std::sqrt(15.0)));
    CHECK(two_value_coefficient({5, 2}) == doctest::Approx((-3.0 + std::sqrt(5.0)) / 2.0));
    CHECK(two_value_coefficient({2, 1}) == doctest::Approx(-1.0));
}

TEST_CASE("two-value representations reach theta") {
    struct Case {
        int q, s;
        double value;
    };
    // Per-vertex probability (a+1)^2 / (2(a^2+1)) works out to 1/4, 1/3,
    // 3/8 and 1/6 for these roots.
    for (auto c : {Case{3, 1, 20.0 / 4.0}, Case{4, 1, 70.0 / 3.0}, Case{5, 1, 252.0 * 3.0 / 8.0}, Case{5, 2, 252.0 / 6.0}}) {
        CAPTURE(c.q);
        CAPTURE(c.s);
        const auto rep = two_value_representation({c.q, c.s});
        const auto g = intersection_family({c.q, c.s});
        CHECK(rep.dimension == static_cast<std::size_t>(2 * c.q));
        CHECK(std::abs(rep.value - c.value) < 1e-9);
        const auto check = validate_representation(g, rep, 1e-9);
        CHECK(check.passed);
        CHECK(check.max_edge_overlap <= 1e-12);
        const double a = two_value_coefficient({c.q, c.s});
        const double per_vertex = (a + 1) * (a + 1) / (2 * (a * a + 1));
        CHECK(rep.probabilities[0] == doctest::Approx(per_vertex).epsilon(1e-12));
    }
    CHECK(two_value_representation({5, 1}).value == doctest::Approx(94.5).epsilon(1e-12));
    CHECK(two_value_representation({5, 2}).value == doctest::Approx(42.0).epsilon(1e-12));

    const auto degenerate = two_value_representation({2, 1});
    CHECK(std::abs(degenerate.value) < 1e-12);
    CHECK(validate_representation(intersection_family({2, 1}), degenerate, 1e-12).passed);
}

TEST_CASE("two-value representation needs q >= 2s") {
    CHECK_THROWS_AS(two_value_representation({3, 2}), UnsupportedError);
    CHECK_THROWS_AS(two_value_representation({5, 3}), UnsupportedError);
    CHECK_THROWS_AS(two_value_representation({2, 2}), InputError);
}

TEST_CASE("validation catches broken representations") {
    const auto g = cycle(5);
    auto rep = extract_representation(g, solve_theta(g));
    rep.vectors.col(1) = rep.vectors.col(0);  // edge (0,1) now parallel
    rep.probabilities[1] = rep.probabilities[0];
    rep.value = rep.probabilities.sum();
    const auto v = validate_representation(g, rep, 1e-6);
    CHECK_FALSE(v.passed);
    CHECK(v.max_edge_overlap == doctest::Approx(1.0));

    auto wrong_value = extract_representation(g, solve_theta(g));
    wrong_value.value += 0.1;
    CHECK_FALSE(validate_representation(g, wrong_value, 1e-6).passed);

    CHECK_THROWS_AS(validate_representation(cycle(6), extract_representation(g, solve_theta(g)), 1e-6), InputError);
}

TEST_CASE("extracted values stay inside the certified bracket") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto g = random_graph(4 + seed % 9, 0.5, 60 + seed);
        const auto theta = solve_theta(g);
        const auto rep = extract_representation(g, theta);
        CAPTURE(seed);
        CHECK(validate_representation(g, rep, 1e-6).passed);
        CHECK(rep.value >= theta.lower_bound - 1e-6);
        CHECK(rep.value <= theta.upper_bound + 1e-6);
        // A value above alpha is a contextuality witness.
        const int alpha = brute_force_alpha(g);
        if (theta.lower_bound > alpha + 1e-6) CHECK(rep.value > alpha);
    }
}
