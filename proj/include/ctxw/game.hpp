#pragma once

#include <cstdint>
#include <vector>

namespace ctxw {

/// Alice presses button i with probability betting[i] and wins when the
/// light shows 1, which happens with probability probabilities[i]. Bob, who
/// trusts the noncontextual bound alpha_used, pays g_i - epsilon per unit
/// stake on a win with g_i = 1 / (alpha_used * betting[i]).
struct GameConfig {
    std::vector<double> probabilities;
    std::vector<double> betting;
    double alpha_used = 1.0;
    double epsilon = 0.0;
    double stake = 1.0;
    std::uint64_t rounds = 1'000'000;
    std::uint64_t seed = 0;
};

struct GameResult {
    double empirical_profit_per_unit = 0.0;
    double standard_error = 0.0;
    double analytic_expectation = 0.0;
    std::uint64_t rounds = 0;
    std::uint64_t seed = 0;
};

/// Throws InputError on empty or mismatched vectors, probabilities outside
/// [0, 1], non-positive bets, bets not summing to 1 within 1e-12, or
/// non-positive alpha_used/stake, or negative epsilon.
void validate(const GameConfig& cfg);

std::vector<double> uniform_betting(std::size_t n);

/// (1/alpha) sum P_i - epsilon sum b_i P_i - 1, per unit stake per round.
double expected_profit(const GameConfig& cfg);

/// Plays cfg.rounds independent rounds with Rng(cfg.seed). Throws InputError
/// when rounds is 0.
GameResult simulate_game(const GameConfig& cfg);

}  // namespace ctxw
