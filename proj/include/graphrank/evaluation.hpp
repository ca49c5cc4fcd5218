#pragma once

#include <vector>

#include "graphrank/solvers.hpp"

namespace graphrank {

// One leave-one-out run: the held-out seed, the remaining queries, and the
// 1-based position of the held-out seed among the non-query candidates.
struct LooRun {
    Eigen::Index left_out;
    std::vector<Eigen::Index> queries;
    int rank_position;
};

struct EvalReport {
    OperatorKind method;
    std::vector<LooRun> runs;
    std::vector<int> k_values;
    std::vector<double> accuracy;  // percentage per k, aligned with k_values

    double accuracy_at(int k) const;
};

struct ConfusionCounts {
    long tp = 0;
    long tn = 0;
    long fp = 0;
    long fn = 0;

    long total() const { return tp + tn + fp + fn; }
};

// For each seed s: rank with the remaining seeds as queries and record where s
// lands among the n - |queries| candidates. Solver failures are rethrown with
// the run identified.
std::vector<LooRun> run_leave_one_out(const SimilarityGraph& g, const SeedSet& seeds,
                                      OperatorKind method, const SolverConfig& cfg);

// accuracy[k] = 100 * |{runs with rank_position <= k}| / |runs|.
EvalReport accuracy_at_k(std::vector<LooRun> runs, std::vector<int> k_values,
                         OperatorKind method);

// (tp + tn) / (tp + tn + fp + fn).
double q_measure(const ConfusionCounts& c);

}  // namespace graphrank
