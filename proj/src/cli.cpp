#include "ctxw/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ctxw/error.hpp"
#include "ctxw/game.hpp"
#include "ctxw/graph.hpp"
#include "ctxw/graph_io.hpp"
#include "ctxw/independence.hpp"
#include "ctxw/representation.hpp"
#include "ctxw/serialization.hpp"
#include "ctxw/theta.hpp"
#include "ctxw/witness.hpp"

namespace ctxw::cli {

namespace {

struct RunConfig {
    std::string format = "text";
    std::string config;

    std::string in;
    std::string out;
    std::string json_out;
    std::string csv_out;

    // gen
    std::string family;
    std::size_t n = 0;
    int q = 0;
    int s = 0;
    double p = 0.5;
    std::uint64_t seed = 0;

    // theta
    double tol = ThetaConfig{}.tolerance;
    std::size_t max_iter = ThetaConfig{}.max_iterations;

    // alpha
    double budget = 600.0;
    std::uint64_t node_limit = 0;
    int target = 0;

    // repr
    std::string method = "extract";
    std::string repr;
    double repr_tol = 1e-6;

    // bound
    int k = 3;

    // scan
    unsigned workers = 1;
    bool long_run = false;

    // table
    double stretch_budget = 60.0;
    int max_q = 5;

    // game
    double alpha = 0.0;
    double epsilon = 0.0;
    double stake = 1.0;
    std::uint64_t rounds = 1'000'000;
    std::vector<double> betting;
};

ThetaConfig theta_config(const RunConfig& rc) {
    ThetaConfig cfg;
    cfg.tolerance = rc.tol;
    cfg.max_iterations = rc.max_iter;
    return cfg;
}

SearchBudget search_budget(const RunConfig& rc) {
    SearchBudget b;
    b.time_limit = std::chrono::duration<double>(rc.budget);
    if (rc.node_limit > 0) b.node_limit = rc.node_limit;
    if (rc.target > 0) b.target = rc.target;
    return b;
}

std::string fixed(double x) { return fmt::format("{:.5f}", x); }

class Runner {
public:
    Runner(const RunConfig& rc, std::ostream& out) : rc_(rc), out_(out) {}

    int gen() {
        Graph g;
        if (rc_.family == "cycle")
            g = cycle(rc_.n);
        else if (rc_.family == "complete")
            g = complete(rc_.n);
        else if (rc_.family == "gqs")
            g = intersection_family({rc_.q, rc_.s});
        else if (rc_.family == "alon-r2")
            g = alon_r2();
        else if (rc_.family == "random")
            g = random_graph(rc_.n, rc_.p, rc_.seed);
        else
            throw InputError(fmt::format("unknown family '{}'", rc_.family));
        check_graph_invariants(g);
        save_graph(rc_.out, g);
        out_ << fmt::format("wrote {} (n={}, m={})\n", rc_.out, g.order(), g.edge_count());
        return kOk;
    }

    int alpha() {
        const Graph g = load_graph(rc_.in);
        const auto r = max_independent_set(g, search_budget(rc_));
        Json j = to_json(r);
        j["n"] = g.order();
        emit(j, fmt::format("alpha in [{}, {}] ({}), witness size {}, {} nodes\n", r.lower_bound, r.upper_bound,
                            r.exact ? "exact" : "budget exhausted", r.witness.size(), r.nodes_explored));
        return r.exact ? kOk : kUnconverged;
    }

    int theta() {
        const Graph g = load_graph(rc_.in);
        const auto r = solve_theta(g, theta_config(rc_));
        Json j = to_json(r);
        j["n"] = g.order();
        emit(j, fmt::format("theta in [{}, {}] after {} iterations ({})\n", fixed(r.lower_bound), fixed(r.upper_bound),
                            r.iterations, r.converged ? "converged" : "not converged"));
        return r.converged ? kOk : kUnconverged;
    }

    int witness() {
        const Graph g = load_graph(rc_.in);
        const auto r = witness_report(g, theta_config(rc_), search_budget(rc_));
        emit(to_json(r), fmt::format("n={} alpha in [{}, {}] theta in [{}, {}] ratio in [{}, {}] witness={} "
                                     "amc_fraction={} predicted_profit={}\n",
                                     r.n, r.alpha_lb, r.alpha_ub, fixed(r.theta_lb), fixed(r.theta_ub), fixed(r.ratio_lb),
                                     fixed(r.ratio_ub), r.is_witness ? "yes" : "no", fixed(r.amc_fraction),
                                     fixed(r.predicted_profit)));
        return r.alpha_exact && r.theta_converged ? kOk : kUnconverged;
    }

    int bound() {
        const Graph g = load_graph(rc_.in);
        const auto c = check_small_alpha_bound(g, rc_.k, theta_config(rc_), search_budget(rc_));
        emit(to_json(c), fmt::format("theta <= {} against bound {} (k={}): {}\n", fixed(c.theta_ub), fixed(c.bound), c.k,
                                     c.satisfied ? "satisfied" : "VIOLATED"));
        return c.satisfied ? kOk : kInvariantFailure;
    }

    int repr() {
        OrthonormalRepresentation rep;
        bool converged = true;
        if (rc_.method == "extract") {
            const Graph g = load_graph(rc_.in);
            const auto theta = solve_theta(g, theta_config(rc_));
            converged = theta.converged;
            rep = extract_representation(g, theta);
        } else if (rc_.method == "two-value") {
            rep = two_value_representation({rc_.q, rc_.s});
        } else {
            throw InputError(fmt::format("unknown method '{}'", rc_.method));
        }
        if (rc_.out.empty()) throw InputError("repr needs --out");
        write_text_file(rc_.out, dump(to_json(rep)));
        out_ << fmt::format("wrote {} (dimension {}, value {})\n", rc_.out, rep.dimension, fixed(rep.value));
        return converged ? kOk : kUnconverged;
    }

    int validate_repr() {
        const Graph g = load_graph(rc_.in);
        const auto rep = representation_from_json(read_json_file(rc_.repr));
        const auto v = validate_representation(g, rep, rc_.repr_tol);
        Json j{{"passed", v.passed},
               {"max_norm_error", v.max_norm_error},
               {"max_edge_overlap", v.max_edge_overlap},
               {"max_probability_error", v.max_probability_error},
               {"value_error", v.value_error},
               {"value", rep.value}};
        emit(j, fmt::format("{}: norm {:.3e}, edge overlap {:.3e}, probability {:.3e}, value {:.3e}\n",
                            v.passed ? "PASS" : "FAIL", v.max_norm_error, v.max_edge_overlap, v.max_probability_error,
                            v.value_error));
        return v.passed ? kOk : kInputError;
    }

    int scan() {
        ScanOptions opts;
        opts.workers = rc_.workers;
        opts.allow_long_run = rc_.long_run;
        std::ostringstream csv;
        csv << scan_csv_header();
        opts.on_row = [&](const ScanRow& row) { csv << scan_csv_line(row); };
        const auto r = exhaustive_ratio_scan(rc_.n, theta_config(rc_), opts);
        if (!rc_.csv_out.empty()) write_text_file(rc_.csv_out, csv.str());
        if (rc_.format == "csv") {
            out_ << csv.str();
            return kOk;
        }
        emit(to_json(r), fmt::format("n={} max ratio {} at edge mask {} ({} graphs: {} settled, {} solved, {} pruned)\n",
                                     r.n, fixed(r.max_ratio), r.argmax_mask, r.graphs, r.settled_by_clique_cover,
                                     r.solved, r.pruned));
        return kOk;
    }

    int table() {
        TableOptions opts;
        opts.theta = theta_config(rc_);
        opts.alpha_budget = search_budget(rc_);
        opts.stretch_budget.time_limit = std::chrono::duration<double>(rc_.stretch_budget);
        opts.max_q = rc_.max_q;
        const bool text = rc_.format == "text";
        if (text) {
            out_ << fmt::format("{:>2} {:>2} {:>4} {:>11} {:>25} {:>10} {:>6} {:>7} {:>15} {:>6}\n", "q", "s", "n",
                                "alpha", "theta", "two-value", "ref a", "ref th", "alpha check", "theta");
            opts.on_row = [&](const TableRow& row) {
                const auto& ref = row.reference;
                const std::string alpha = row.alpha.exact ? fmt::format("{}", row.alpha.lower_bound)
                                                          : fmt::format("[{},{}]", row.alpha.lower_bound,
                                                                        row.alpha.upper_bound);
                out_ << fmt::format("{:>2} {:>2} {:>4} {:>11} {:>25} {:>10} {:>6} {:>7} {:>15} {:>6}\n", ref.q, ref.s,
                                    ref.n, alpha,
                                    fmt::format("[{}, {}]", fixed(row.theta.lower_bound), fixed(row.theta.upper_bound)),
                                    row.two_value ? fixed(*row.two_value) : "-",
                                    fmt::format("{}{}", ref.alpha_is_lower_bound ? ">=" : "", ref.alpha), ref.theta,
                                    to_string(row.alpha_check), to_string(row.theta_check));
                if (!row.note.empty()) out_ << "      note: " << row.note << '\n';
                out_.flush();
            };
        }
        const auto rows = reproduce_table(opts);
        std::string csv = table_csv_header();
        for (const auto& row : rows) csv += table_csv_line(row);
        if (!rc_.csv_out.empty()) write_text_file(rc_.csv_out, csv);
        if (rc_.format == "csv") out_ << csv;
        if (rc_.format == "json" || !rc_.json_out.empty()) {
            Json j = Json::array();
            for (const auto& row : rows)
                j.push_back({{"q", row.reference.q},
                             {"s", row.reference.s},
                             {"n", row.reference.n},
                             {"alpha", to_json(row.alpha)},
                             {"theta", to_json(row.theta)},
                             {"two_value", row.two_value ? Json(*row.two_value) : Json(nullptr)},
                             {"alpha_check", to_string(row.alpha_check)},
                             {"theta_check", to_string(row.theta_check)},
                             {"note", row.note}});
            if (!rc_.json_out.empty()) write_text_file(rc_.json_out, dump(j));
            if (rc_.format == "json") out_ << dump(j);
        }
        const bool all_pass = std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.blocking_pass(); });
        return all_pass ? kOk : kInvariantFailure;
    }

    int game() {
        GameConfig cfg;
        const auto rep = representation_from_json(read_json_file(rc_.repr));
        cfg.probabilities.assign(rep.probabilities.data(), rep.probabilities.data() + rep.probabilities.size());
        cfg.betting = rc_.betting.empty() ? uniform_betting(cfg.probabilities.size()) : rc_.betting;
        cfg.alpha_used = rc_.alpha;
        if (cfg.alpha_used <= 0.0) {
            if (rc_.in.empty()) throw InputError("game needs --alpha or a graph via --in");
            const auto a = max_independent_set(load_graph(rc_.in), search_budget(rc_));
            // A looser bound can only lower the gambler's profit.
            cfg.alpha_used = a.upper_bound;
        }
        cfg.epsilon = rc_.epsilon;
        cfg.stake = rc_.stake;
        cfg.rounds = rc_.rounds;
        cfg.seed = rc_.seed;
        const auto r = simulate_game(cfg);
        emit(to_json(r), fmt::format("profit per unit {} +/- {} (analytic {}) over {} rounds\n",
                                     fixed(r.empirical_profit_per_unit), fixed(r.standard_error),
                                     fixed(r.analytic_expectation), r.rounds));
        return kOk;
    }

private:
    void emit(const Json& j, const std::string& text) {
        if (!rc_.json_out.empty()) write_text_file(rc_.json_out, dump(j));
        if (rc_.format == "json")
            out_ << dump(j);
        else
            out_ << text;
    }

    const RunConfig& rc_;
    std::ostream& out_;
};

// Inserts `--key value` pairs from the config file right after the
// subcommand token. Options take the last value given, so explicit flags
// that follow still win.
std::vector<std::string> apply_config(const std::vector<std::string>& args, CLI::App& app) {
    std::string path;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        if (args[i].starts_with("--config=")) path = args[i].substr(9);
    }
    if (path.empty()) return args;

    std::size_t sub_pos = 0;
    CLI::App* sub = nullptr;
    for (std::size_t i = 1; i < args.size() && !sub; ++i) {
        for (auto* candidate : app.get_subcommands({})) {
            if (candidate->get_name() == args[i]) {
                sub = candidate;
                sub_pos = i;
                break;
            }
        }
    }
    if (!sub) return args;

    const Json cfg = read_json_file(path);
    if (!cfg.is_object()) throw InputError("config file must hold a JSON object");
    std::vector<std::string> injected;
    for (const auto& [key, value] : cfg.items()) {
        const auto* opt = sub->get_option_no_throw("--" + key);
        if (!opt) continue;
        if (value.is_boolean()) {
            if (value.get<bool>()) injected.push_back("--" + key);
        } else if (value.is_array()) {
            for (const auto& item : value) {
                injected.push_back("--" + key);
                injected.push_back(item.is_string() ? item.get<std::string>() : item.dump());
            }
        } else {
            injected.push_back("--" + key);
            injected.push_back(value.is_string() ? value.get<std::string>() : value.dump());
        }
    }
    std::vector<std::string> out(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(sub_pos + 1));
    out.insert(out.end(), injected.begin(), injected.end());
    out.insert(out.end(), args.begin() + static_cast<std::ptrdiff_t>(sub_pos + 1), args.end());
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig rc;
    CLI::App app{"Contextuality witnesses from exclusivity graphs: independence number, Lovasz theta, "
                 "quantum realisations and the betting game."};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", rc.format, "stdout format")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--config", rc.config, "JSON file of option defaults (flags take precedence)");
        sub->add_option("--json", rc.json_out, "also write the JSON result here");
    };
    auto theta_opts = [&](CLI::App* sub) {
        sub->add_option("--tol", rc.tol, "certified gap target for theta")->check(CLI::PositiveNumber);
        sub->add_option("--max-iter", rc.max_iter, "iteration cap for the theta solver")->check(CLI::PositiveNumber);
    };
    auto alpha_opts = [&](CLI::App* sub) {
        sub->add_option("--budget", rc.budget, "time budget in seconds for the independence search")
            ->check(CLI::PositiveNumber);
        sub->add_option("--node-limit", rc.node_limit, "node budget for the independence search");
        sub->add_option("--target", rc.target, "stop once an independent set this large is found");
    };
    auto graph_in = [&](CLI::App* sub) {
        sub->add_option("--in", rc.in, "graph file (.json structured text, anything else DIMACS)")->required();
    };

    auto* gen = app.add_subcommand("gen", "generate a graph file");
    common(gen);
    gen->add_option("--family", rc.family, "cycle|complete|gqs|alon-r2|random")
        ->required()
        ->check(CLI::IsMember({"cycle", "complete", "gqs", "alon-r2", "random"}));
    gen->add_option("--n", rc.n, "vertex count (cycle, complete, random)");
    gen->add_option("--q", rc.q, "subset size for gqs");
    gen->add_option("--s", rc.s, "intersection size for gqs");
    gen->add_option("--p", rc.p, "edge probability for random");
    gen->add_option("--seed", rc.seed, "seed for random");
    gen->add_option("--out", rc.out, "output graph file")->required();

    auto* alpha = app.add_subcommand("alpha", "independence number (noncontextual bound)");
    common(alpha);
    graph_in(alpha);
    alpha_opts(alpha);

    auto* theta = app.add_subcommand("theta", "Lovasz number (quantum bound)");
    common(theta);
    graph_in(theta);
    theta_opts(theta);

    auto* witness = app.add_subcommand("witness", "alpha, theta and the contextuality ratio");
    common(witness);
    graph_in(witness);
    theta_opts(witness);
    alpha_opts(witness);

    auto* bound = app.add_subcommand("bound", "check theta <= M_k n^(1-2/k) for a graph with alpha < k");
    common(bound);
    graph_in(bound);
    theta_opts(bound);
    alpha_opts(bound);
    bound->add_option("--k", rc.k, "independence bound k (only 3 is supported)");

    auto* repr = app.add_subcommand("repr", "write an orthonormal representation with handle");
    common(repr);
    repr->add_option("--method", rc.method, "extract|two-value")->check(CLI::IsMember({"extract", "two-value"}));
    repr->add_option("--in", rc.in, "graph file (extract)");
    repr->add_option("--q", rc.q, "subset size (two-value)");
    repr->add_option("--s", rc.s, "intersection size (two-value)");
    repr->add_option("--out", rc.out, "representation JSON file")->required();
    theta_opts(repr);

    auto* validate = app.add_subcommand("validate-repr", "check a representation against a graph");
    common(validate);
    graph_in(validate);
    validate->add_option("--repr", rc.repr, "representation JSON file")->required();
    validate->add_option("--repr-tol", rc.repr_tol, "tolerance for every check")->check(CLI::PositiveNumber);

    auto* scan = app.add_subcommand("scan", "maximum theta/alpha over all labelled graphs on n vertices");
    common(scan);
    scan->add_option("--n", rc.n, "vertex count (<= 7)")->required();
    scan->add_option("--workers", rc.workers, "worker threads")->check(CLI::PositiveNumber);
    scan->add_flag("--long-run", rc.long_run, "allow n = 7");
    scan->add_option("--csv", rc.csv_out, "per-graph CSV output");
    theta_opts(scan);

    auto* table = app.add_subcommand("table", "recompute the G(q,s) table and compare with the published values");
    common(table);
    theta_opts(table);
    alpha_opts(table);
    table->add_option("--stretch-budget", rc.stretch_budget, "seconds per q = 5 independence search")
        ->check(CLI::PositiveNumber);
    table->add_option("--max-q", rc.max_q, "largest q to include")->check(CLI::Range(2, 5));
    table->add_option("--csv", rc.csv_out, "table CSV output");

    auto* game = app.add_subcommand("game", "simulate the betting game");
    common(game);
    game->add_option("--repr", rc.repr, "representation JSON supplying the probabilities")->required();
    game->add_option("--in", rc.in, "graph file, used for alpha when --alpha is absent");
    game->add_option("--alpha", rc.alpha, "bound trusted by the bookmaker");
    game->add_option("--epsilon", rc.epsilon, "bookmaker margin");
    game->add_option("--stake", rc.stake, "money per round");
    game->add_option("--rounds", rc.rounds, "rounds to play");
    game->add_option("--seed", rc.seed, "generator seed");
    game->add_option("--betting", rc.betting, "betting distribution (defaults to uniform)");
    alpha_opts(game);

    try {
        const auto full = apply_config(args, app);
        std::vector<std::string> reversed(full.begin() + (full.empty() ? 0 : 1), full.end());
        std::reverse(reversed.begin(), reversed.end());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        Runner runner(rc, out);
        if (*gen) return runner.gen();
        if (*alpha) return runner.alpha();
        if (*theta) return runner.theta();
        if (*witness) return runner.witness();
        if (*bound) return runner.bound();
        if (*repr) return runner.repr();
        if (*validate) return runner.validate_repr();
        if (*scan) return runner.scan();
        if (*table) return runner.table();
        if (*game) return runner.game();
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const UnsupportedError& e) {
        err << "unsupported: " << e.what() << '\n';
        return kInputError;
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInvariantFailure;
    }
    return kInputError;
}

}  // namespace ctxw::cli
