#include "graphrank/evaluation.hpp"

#include <algorithm>
#include <sstream>

#include "graphrank/errors.hpp"

namespace graphrank {

double EvalReport::accuracy_at(int k) const {
    for (std::size_t i = 0; i < k_values.size(); ++i) {
        if (k_values[i] == k) return accuracy[i];
    }
    throw ValidationError("k = " + std::to_string(k) + " is not in the report");
}

std::vector<LooRun> run_leave_one_out(const SimilarityGraph& g, const SeedSet& seeds,
                                      OperatorKind method, const SolverConfig& cfg) {
    cfg.validate();
    if (seeds.size() < 2) {
        throw ValidationError("leave-one-out needs at least 2 seeds, got " +
                              std::to_string(seeds.size()));
    }
    if (seeds.node_count() != g.n) {
        throw DimensionError("seed set was validated against a different node count");
    }

    const PropagationOperator op = make_operator(g, method);

    std::vector<LooRun> runs;
    runs.reserve(seeds.size());
    for (Eigen::Index left_out : seeds.indices()) {
        const SeedSet queries = seeds.without(left_out);
        const Eigen::VectorXd y = initial_ranking(g.n, queries);
        RankingVector rv;
        try {
            rv = solve(op, y, cfg);
        } catch (const NumericError& e) {
            std::ostringstream msg;
            msg << "leave-one-out run (left_out node " << left_out << ", method "
                << kind_name(method) << "): " << e.what();
            throw NumericError(msg.str());
        }
        // The left-out seed competes among every non-query node.
        const std::vector<Eigen::Index> order = rank_order(rv.scores, queries);
        const auto at = std::find(order.begin(), order.end(), left_out);
        const int position = static_cast<int>(at - order.begin()) + 1;
        runs.push_back(LooRun{left_out, queries.indices(), position});
    }
    return runs;
}

EvalReport accuracy_at_k(std::vector<LooRun> runs, std::vector<int> k_values,
                         OperatorKind method) {
    if (runs.empty()) {
        throw ValidationError("accuracy_at_k needs at least one run");
    }
    EvalReport report;
    report.method = method;
    report.runs = std::move(runs);
    report.k_values = std::move(k_values);
    report.accuracy.reserve(report.k_values.size());
    for (int k : report.k_values) {
        if (k < 1) {
            throw ValidationError("k values must be positive, got " + std::to_string(k));
        }
        long hits = 0;
        for (const LooRun& run : report.runs) {
            if (run.rank_position <= k) ++hits;
        }
        report.accuracy.push_back(100.0 * static_cast<double>(hits) /
                                  static_cast<double>(report.runs.size()));
    }
    return report;
}

double q_measure(const ConfusionCounts& c) {
    if (c.tp < 0 || c.tn < 0 || c.fp < 0 || c.fn < 0) {
        throw ValidationError("confusion counts must be non-negative");
    }
    if (c.total() <= 0) {
        throw ValidationError("confusion counts sum to zero; Q is undefined");
    }
    return static_cast<double>(c.tp + c.tn) / static_cast<double>(c.total());
}

}  // namespace graphrank
