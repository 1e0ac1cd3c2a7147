#include <doctest.h>

#include "ctxw/error.hpp"
#include "ctxw/independence.hpp"
#include "oracles.hpp"

using namespace ctxw;

namespace {

void check_result(const Graph& g, const IndependenceResult& r) {
    CHECK(is_independent(g, r.witness));
    CHECK(static_cast<int>(r.witness.size()) == r.lower_bound);
    CHECK(r.lower_bound <= r.upper_bound);
    CHECK(r.exact == (r.lower_bound == r.upper_bound));
}

}  // namespace

TEST_CASE("brute force alpha") {
    CHECK(brute_force_alpha(complete(5)) == 1);
    CHECK(brute_force_alpha(edgeless(7)) == 7);
    CHECK(oracle::alpha_by_subsets(cycle(5)) == 2);
    CHECK(brute_force_alpha(cycle(5)) == 2);
    CHECK(brute_force_alpha(edgeless(25)) == 25);
    CHECK_THROWS_AS(brute_force_alpha(edgeless(26)), InputError);
}

TEST_CASE("brute force agrees with subset enumeration") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto g = random_graph(1 + seed % 14, 0.35, seed);
        CHECK(brute_force_alpha(g) == oracle::alpha_by_subsets(g));
    }
}

TEST_CASE("greedy lower bound") {
    auto r = greedy_lower_bound(edgeless(4));
    CHECK(r.lower_bound == 4);
    CHECK(r.exact);
    r = greedy_lower_bound(complete(4));
    CHECK(r.lower_bound == 1);
    CHECK(r.upper_bound == 4);
    CHECK_FALSE(r.exact);
    r = greedy_lower_bound(cycle(5));
    CHECK(r.lower_bound == 2);
    // All degrees tie, so vertex 0 goes first, leaving the path 2-3 and then 2.
    CHECK(r.witness == std::vector<Vertex>{0, 2});
}

TEST_CASE("branch and bound on small named graphs") {
    auto r = max_independent_set(cycle(5));
    check_result(cycle(5), r);
    CHECK(r.exact);
    CHECK(r.lower_bound == 2);
    CHECK(r.lower_bound == brute_force_alpha(cycle(5)));

    r = max_independent_set(edgeless(9));
    CHECK(r.exact);
    CHECK(r.lower_bound == 9);
    r = max_independent_set(complete(9));
    CHECK(r.exact);
    CHECK(r.lower_bound == 1);
    r = max_independent_set(Graph(1, {}));
    CHECK(r.lower_bound == 1);
}

TEST_CASE("branch and bound on the n = 70 subset graphs") {
    auto g = intersection_family({4, 1});
    auto r = max_independent_set(g);
    check_result(g, r);
    CHECK(r.exact);
    CHECK(r.lower_bound == 17);

    g = intersection_family({4, 2});
    r = max_independent_set(g);
    check_result(g, r);
    CHECK(r.exact);
    CHECK(r.lower_bound == 10);

    g = intersection_family({4, 3});
    r = max_independent_set(g);
    CHECK(r.exact);
    CHECK(r.lower_bound == 14);
}

TEST_CASE("branch and bound equals brute force on 200 random graphs") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = 1 + seed % 25;
        const double p = 0.1 + 0.8 * static_cast<double>(seed % 9) / 8.0;
        const auto g = random_graph(n, p, 1000 + seed);
        const auto r = max_independent_set(g);
        CAPTURE(seed);
        check_result(g, r);
        REQUIRE(r.exact);
        CHECK(r.lower_bound == brute_force_alpha(g));
    }
}

TEST_CASE("alpha equals the clique number of the complement") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto g = random_graph(5 + seed % 21, 0.5, 77 + seed);
        CHECK(max_independent_set(g).lower_bound == oracle::max_clique(complement(g)));
    }
}

TEST_CASE("adding an edge never increases alpha") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto g = random_graph(12, 0.3, 500 + seed);
        const int before = max_independent_set(g).lower_bound;
        auto edges = g.edges();
        const auto h = complement(g).edges();
        if (h.empty()) continue;
        edges.push_back(h[seed % h.size()]);
        const Graph denser(g.order(), edges);
        CHECK(max_independent_set(denser).lower_bound <= before);
    }
}

TEST_CASE("budget exhaustion returns a valid bracket") {
    const auto g = intersection_family({5, 4});
    SearchBudget b;
    b.node_limit = 2000;
    const auto r = max_independent_set(g, b);
    check_result(g, r);
    CHECK_FALSE(r.exact);
    CHECK(r.lower_bound >= 28);
    CHECK(r.upper_bound <= 252);
    CHECK(r.upper_bound > r.lower_bound);

    // Same node budget, same answer.
    const auto again = max_independent_set(g, b);
    CHECK(again.witness == r.witness);
    CHECK(again.upper_bound == r.upper_bound);
}

TEST_CASE("target stops the search early") {
    const auto g = intersection_family({5, 4});
    SearchBudget b;
    b.target = 30;
    const auto r = max_independent_set(g, b);
    check_result(g, r);
    CHECK(r.lower_bound >= 30);
}
