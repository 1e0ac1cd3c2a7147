#include "ctxw/serialization.hpp"

#include <fstream>

#include <fmt/format.h>

#include "ctxw/error.hpp"

namespace ctxw {

namespace {

std::vector<double> to_std(const Vector& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

Json to_json(const WitnessReport& r) {
    return Json{
        {"n", r.n},
        {"alpha", {{"lb", r.alpha_lb}, {"ub", r.alpha_ub}, {"exact", r.alpha_exact}}},
        {"theta", {{"lb", r.theta_lb}, {"ub", r.theta_ub}, {"converged", r.theta_converged}}},
        {"ratio", {{"lb", r.ratio_lb}, {"ub", r.ratio_ub}}},
        {"is_witness", r.is_witness},
        {"amc_fraction", r.amc_fraction},
        {"predicted_profit", r.predicted_profit},
    };
}

Json to_json(const IndependenceResult& r) {
    return Json{
        {"lb", r.lower_bound}, {"ub", r.upper_bound},       {"exact", r.exact},
        {"witness", r.witness}, {"nodes", r.nodes_explored},
    };
}

Json to_json(const ThetaResult& r) {
    return Json{
        {"lb", r.lower_bound},
        {"ub", r.upper_bound},
        {"iterations", r.iterations},
        {"converged", r.converged},
        {"primal_residual", r.primal_residual},
        {"dual_residual", r.dual_residual},
    };
}

Json to_json(const OrthonormalRepresentation& rep) {
    Json vectors = Json::array();
    for (Eigen::Index i = 0; i < rep.vectors.cols(); ++i) vectors.push_back(to_std(rep.vectors.col(i)));
    return Json{
        {"dimension", rep.dimension},
        {"handle", to_std(rep.handle)},
        {"vectors", std::move(vectors)},
        {"probabilities", to_std(rep.probabilities)},
        {"value", rep.value},
    };
}

OrthonormalRepresentation representation_from_json(const Json& j) {
    try {
        OrthonormalRepresentation rep;
        rep.dimension = j.at("dimension").get<std::size_t>();
        const auto handle = j.at("handle").get<std::vector<double>>();
        const auto vectors = j.at("vectors").get<std::vector<std::vector<double>>>();
        const auto probabilities = j.at("probabilities").get<std::vector<double>>();
        const auto dim = static_cast<Eigen::Index>(rep.dimension);
        if (handle.size() != rep.dimension) throw InputError("representation: handle length differs from dimension");
        if (probabilities.size() != vectors.size()) throw InputError("representation: one probability per vector required");
        rep.handle = Eigen::Map<const Vector>(handle.data(), dim);
        rep.vectors.resize(dim, static_cast<Eigen::Index>(vectors.size()));
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            if (vectors[i].size() != rep.dimension)
                throw InputError(fmt::format("representation: vector {} has length {}", i, vectors[i].size()));
            rep.vectors.col(static_cast<Eigen::Index>(i)) = Eigen::Map<const Vector>(vectors[i].data(), dim);
        }
        rep.probabilities = Eigen::Map<const Vector>(probabilities.data(), static_cast<Eigen::Index>(probabilities.size()));
        rep.value = j.at("value").get<double>();
        return rep;
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(fmt::format("representation JSON: {}", ex.what()));
    }
}

Json to_json(const GameResult& r) {
    return Json{
        {"empirical", r.empirical_profit_per_unit},
        {"stderr", r.standard_error},
        {"analytic", r.analytic_expectation},
        {"rounds", r.rounds},
        {"seed", r.seed},
    };
}

Json to_json(const BoundCheck& c) {
    return Json{
        {"k", c.k},         {"m_k", c.m_k},         {"bound", c.bound},
        {"theta_ub", c.theta_ub}, {"satisfied", c.satisfied}, {"slack", c.slack},
    };
}

Json to_json(const ScanResult& r) {
    return Json{
        {"n", r.n},
        {"max_ratio", r.max_ratio},
        {"argmax_mask", r.argmax_mask},
        {"argmax_edges", r.argmax.edges()},
        {"graphs", r.graphs},
        {"settled_by_clique_cover", r.settled_by_clique_cover},
        {"pruned", r.pruned},
        {"solved", r.solved},
    };
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(fmt::format("cannot open '{}'", path));
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(fmt::format("'{}': {}", path, ex.what()));
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError(fmt::format("cannot write '{}'", path));
    out << text;
}

std::string scan_csv_header() { return "edge_bitmask,alpha,theta_lb,theta_ub,ratio_lb\n"; }

std::string scan_csv_line(const ScanRow& row) {
    return fmt::format("{},{},{:.17g},{:.17g},{:.17g}\n", row.edge_mask, row.alpha, row.theta_lb, row.theta_ub, row.ratio_lb);
}

std::string table_csv_header() {
    return "q,s,n,alpha_lb,alpha_ub,alpha_exact,theta_lb,theta_ub,theta_converged,two_value,ref_alpha,ref_theta,"
           "alpha_check,theta_check\n";
}

std::string table_csv_line(const TableRow& row) {
    const auto& ref = row.reference;
    return fmt::format("{},{},{},{},{},{},{:.17g},{:.17g},{},{},{}{},{},{},{}\n", ref.q, ref.s, ref.n, row.alpha.lower_bound,
                       row.alpha.upper_bound, row.alpha.exact ? 1 : 0, row.theta.lower_bound, row.theta.upper_bound,
                       row.theta.converged ? 1 : 0, row.two_value ? fmt::format("{:.17g}", *row.two_value) : "",
                       ref.alpha_is_lower_bound ? ">=" : "", ref.alpha, ref.theta, to_string(row.alpha_check),
                       to_string(row.theta_check));
}

}  // namespace ctxw
