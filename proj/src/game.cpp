#include "ctxw/game.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "ctxw/error.hpp"
#include "ctxw/rng.hpp"

namespace ctxw {

void validate(const GameConfig& cfg) {
    const auto n = cfg.probabilities.size();
    if (n == 0) throw InputError("game needs at least one button");
    if (cfg.betting.size() != n)
        throw InputError(fmt::format("{} probabilities but {} betting weights", n, cfg.betting.size()));
    for (double p : cfg.probabilities)
        if (!(p >= 0.0 && p <= 1.0)) throw InputError(fmt::format("probability {} outside [0, 1]", p));
    for (double b : cfg.betting)
        if (!(b > 0.0)) throw InputError(fmt::format("betting weight {} must be positive", b));
    const double total = std::accumulate(cfg.betting.begin(), cfg.betting.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-12) throw InputError(fmt::format("betting weights sum to {}, not 1", total));
    if (!(cfg.alpha_used > 0.0)) throw InputError("alpha_used must be positive");
    if (!(cfg.epsilon >= 0.0)) throw InputError("epsilon must be non-negative");
    if (!(cfg.stake > 0.0)) throw InputError("stake must be positive");
}

std::vector<double> uniform_betting(std::size_t n) {
    if (n == 0) throw InputError("game needs at least one button");
    std::vector<double> b(n, 1.0 / static_cast<double>(n));
    // Make the sum exactly representable as 1 for the 1e-12 check.
    b.back() = 1.0 - std::accumulate(b.begin(), b.end() - 1, 0.0);
    return b;
}

double expected_profit(const GameConfig& cfg) {
    validate(cfg);
    double sum_p = 0.0, weighted = 0.0;
    for (std::size_t i = 0; i < cfg.probabilities.size(); ++i) {
        sum_p += cfg.probabilities[i];
        weighted += cfg.betting[i] * cfg.probabilities[i];
    }
    return sum_p / cfg.alpha_used - cfg.epsilon * weighted - 1.0;
}

GameResult simulate_game(const GameConfig& cfg) {
    validate(cfg);
    if (cfg.rounds == 0) throw InputError("game needs at least one round");
    const auto n = cfg.probabilities.size();
    std::vector<double> cumulative(n);
    std::partial_sum(cfg.betting.begin(), cfg.betting.end(), cumulative.begin());
    cumulative.back() = 1.0;
    std::vector<double> payout(n);
    for (std::size_t i = 0; i < n; ++i) payout[i] = 1.0 / (cfg.alpha_used * cfg.betting[i]) - cfg.epsilon;

    Rng rng(cfg.seed);
    // Welford running mean/variance of the per-round profit per unit stake.
    double mean = 0.0, m2 = 0.0;
    for (std::uint64_t r = 1; r <= cfg.rounds; ++r) {
        const double pick = rng.uniform();
        const auto i = static_cast<std::size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), pick) - cumulative.begin());
        const bool win = rng.uniform() < cfg.probabilities[i];
        const double stake_profit = ((win ? payout[i] : 0.0) - 1.0) * cfg.stake;
        const double x = stake_profit / cfg.stake;
        const double delta = x - mean;
        mean += delta / static_cast<double>(r);
        m2 += delta * (x - mean);
    }
    GameResult out;
    out.empirical_profit_per_unit = mean;
    out.standard_error = cfg.rounds > 1 ? std::sqrt(m2 / static_cast<double>(cfg.rounds - 1) / static_cast<double>(cfg.rounds)) : 0.0;
    out.analytic_expectation = expected_profit(cfg);
    out.rounds = cfg.rounds;
    out.seed = cfg.seed;
    return out;
}

}  // namespace ctxw
