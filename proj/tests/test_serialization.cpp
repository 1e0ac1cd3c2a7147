#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "ctxw/error.hpp"
#include "ctxw/serialization.hpp"

using namespace ctxw;

TEST_CASE("witness report schema") {
    const auto j = to_json(witness_report(cycle(5)));
    CHECK(j.at("n") == 5);
    for (const char* key : {"lb", "ub", "exact"}) CHECK(j.at("alpha").contains(key));
    for (const char* key : {"lb", "ub", "converged"}) CHECK(j.at("theta").contains(key));
    for (const char* key : {"lb", "ub"}) CHECK(j.at("ratio").contains(key));
    CHECK(j.at("is_witness") == true);
    CHECK(j.contains("amc_fraction"));
    CHECK(j.contains("predicted_profit"));
    CHECK(j.at("alpha").at("lb") == 2);
}

TEST_CASE("representation schema and round trip") {
    const auto rep = two_value_representation({3, 1});
    const auto j = to_json(rep);
    CHECK(j.at("dimension") == 6);
    CHECK(j.at("vectors").size() == 20);
    CHECK(j.at("vectors")[0].size() == 6);
    CHECK(j.at("handle").size() == 6);
    CHECK(j.at("probabilities").size() == 20);
    const auto back = representation_from_json(Json::parse(dump(j)));
    CHECK(back.dimension == rep.dimension);
    CHECK(back.vectors == rep.vectors);
    CHECK(back.handle == rep.handle);
    CHECK(back.probabilities == rep.probabilities);
    CHECK(back.value == rep.value);
}

TEST_CASE("malformed representation JSON") {
    auto j = to_json(two_value_representation({3, 1}));
    auto missing = j;
    missing.erase("handle");
    CHECK_THROWS_AS(representation_from_json(missing), InputError);
    auto short_vec = j;
    short_vec["vectors"][3].erase(0);
    CHECK_THROWS_AS(representation_from_json(short_vec), InputError);
    auto few_probs = j;
    few_probs["probabilities"].erase(0);
    CHECK_THROWS_AS(representation_from_json(few_probs), InputError);
}

TEST_CASE("result objects") {
    const auto alpha = to_json(max_independent_set(cycle(5)));
    CHECK(alpha.at("lb") == 2);
    CHECK(alpha.at("exact") == true);
    CHECK(alpha.at("witness").size() == 2);
    CHECK_FALSE(alpha.contains("elapsed_seconds"));

    GameConfig cfg;
    cfg.probabilities = {0.5, 0.5};
    cfg.betting = uniform_betting(2);
    cfg.rounds = 10;
    cfg.seed = 4;
    const auto game = to_json(simulate_game(cfg));
    for (const char* key : {"empirical", "stderr", "analytic", "rounds", "seed"}) CHECK(game.contains(key));
    CHECK(game.at("rounds") == 10);
}

TEST_CASE("doubles survive a text round trip") {
    const auto r = solve_theta(cycle(7));
    const auto back = Json::parse(dump(to_json(r)));
    CHECK(back.at("lb").get<double>() == r.lower_bound);
    CHECK(back.at("ub").get<double>() == r.upper_bound);
}

TEST_CASE("scan CSV") {
    CHECK(scan_csv_header() == "edge_bitmask,alpha,theta_lb,theta_ub,ratio_lb\n");
    ScanRow row{1023, 1, 1.0, 1.0, 1.0};
    CHECK(scan_csv_line(row) == "1023,1,1,1,1\n");
    row = {5, 2, 0.5, 2.25, 0.25};
    CHECK(scan_csv_line(row) == "5,2,0.5,2.25,0.25\n");
}

TEST_CASE("file helpers") {
    const auto path = (std::filesystem::temp_directory_path() / "ctxw_serialization_test.json").string();
    write_text_file(path, dump(Json{{"a", 1}}));
    CHECK(read_json_file(path).at("a") == 1);
    write_text_file(path, "{not json");
    CHECK_THROWS_AS(read_json_file(path), InputError);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_json_file(path), InputError);
}
