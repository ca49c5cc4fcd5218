#include "graphrank/pipeline.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "graphrank/errors.hpp"

namespace graphrank {

const char* method_token(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::random_walk: return "rw";
        case OperatorKind::symmetric_normalized: return "sym";
        case OperatorKind::unnormalized_laplacian: return "unnorm";
    }
    return "unknown";
}

namespace {

struct LoadedInputs {
    Dataset data;
    std::vector<std::int64_t> seed_ids;
    SeedSet seeds;
    SimilarityGraph graph;
};

LoadedInputs load_inputs(const PipelineConfig& cfg) {
    Dataset data = load_features(cfg.input_path, cfg.load);
    std::vector<std::int64_t> seed_ids = parse_seed_spec(cfg.seeds_spec);
    SeedSet seeds = resolve_seeds(data, seed_ids);
    SimilarityGraph graph = build_knn_graph(data.features, cfg.graph);
    return LoadedInputs{std::move(data), std::move(seed_ids), std::move(seeds), std::move(graph)};
}

std::string join_int64(const std::vector<std::int64_t>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out << ',';
        out << values[i];
    }
    return out.str();
}

std::string join_int(const std::vector<int>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out << ',';
        out << values[i];
    }
    return out.str();
}

// Full effective configuration, so any report reproduces from its own header.
void echo_config(const PipelineConfig& cfg, const LoadedInputs& in, const char* command,
                 std::ostream& out) {
    out << "# graphrank " << command << '\n';
    out << "# input=" << cfg.input_path << " rows=" << in.data.rows()
        << " cols=" << in.data.features.cols() << '\n';
    out << "# seeds=" << join_int64(in.seed_ids) << " id-base=" << cfg.load.id_base
        << " header=" << (cfg.load.has_header ? 1 : 0)
        << " id-column=" << (cfg.load.id_column ? 1 : 0) << '\n';
    out << "# knn=" << cfg.graph.k << " bandwidth=" << format_double(cfg.graph.bandwidth_t)
        << " distance=" << distance_name(cfg.graph.distance)
        << " zscore=" << (cfg.graph.standardize ? 1 : 0) << '\n';
    out << "# alpha=" << format_double(cfg.solver.alpha)
        << " gamma=" << format_double(cfg.solver.gamma) << " mode=" << mode_name(cfg.solver.mode)
        << " tol=" << format_double(cfg.solver.tolerance)
        << " max-iters=" << cfg.solver.max_iterations << '\n';
}

}  // namespace

void run_rank(const PipelineConfig& cfg, std::ostream& out) {
    cfg.solver.validate();
    if (cfg.methods.empty()) {
        throw ValidationError("no method requested");
    }
    const LoadedInputs in = load_inputs(cfg);

    echo_config(cfg, in, "rank", out);
    const Eigen::VectorXd y = initial_ranking(in.graph.n, in.seeds);

    for (OperatorKind method : cfg.methods) {
        const PropagationOperator op = make_operator(in.graph, method);
        const RankingVector rv = solve(op, y, cfg.solver);
        const std::vector<Eigen::Index> order = rank_order(rv.scores, in.seeds);

        out << "# method=" << method_token(method) << " iterations="
            << (rv.iterations ? std::to_string(*rv.iterations) : std::string("direct"))
            << " residual=" << format_double(rv.residual, 6) << '\n';
        out << "rank\tid\tscore\n";
        for (std::size_t r = 0; r < order.size(); ++r) {
            out << r + 1 << '\t' << in.data.ids[static_cast<std::size_t>(order[r])] << '\t'
                << format_double(rv.scores[order[r]]) << '\n';
        }
    }
}

void run_eval(const PipelineConfig& cfg, std::ostream& out) {
    cfg.solver.validate();
    if (!cfg.leave_one_out) {
        throw ValidationError("only the leave-one-out protocol is supported; enable --loo");
    }
    if (cfg.methods.empty()) {
        throw ValidationError("no method requested");
    }
    if (cfg.k_values.empty()) {
        throw ValidationError("no top-k values requested");
    }
    const LoadedInputs in = load_inputs(cfg);
    if (in.seeds.size() < 2) {
        throw ValidationError("leave-one-out needs at least 2 seeds, got " +
                              std::to_string(in.seeds.size()));
    }

    echo_config(cfg, in, "eval", out);
    const Eigen::Index pool = in.graph.n - static_cast<Eigen::Index>(in.seeds.size()) + 1;
    out << "# topk=" << join_int(cfg.k_values) << " loo=1 runs-per-method=" << in.seeds.size()
        << " candidate-pool=" << pool << '\n';

    std::vector<EvalReport> reports;
    reports.reserve(cfg.methods.size());
    for (OperatorKind method : cfg.methods) {
        std::vector<LooRun> runs = run_leave_one_out(in.graph, in.seeds, method, cfg.solver);
        reports.push_back(accuracy_at_k(std::move(runs), cfg.k_values, method));
    }

    // Human-readable grid, one row per method.
    out << "accuracy@k (%)\n";
    out << std::left << std::setw(10) << "method";
    for (int k : cfg.k_values) {
        out << std::right << std::setw(10) << ("k=" + std::to_string(k));
    }
    out << '\n';
    for (const EvalReport& report : reports) {
        out << std::left << std::setw(10) << method_token(report.method);
        for (double acc : report.accuracy) {
            out << std::right << std::setw(10) << format_percent(acc);
        }
        out << '\n';
    }

    // Machine-readable records.
    for (const EvalReport& report : reports) {
        for (const LooRun& run : report.runs) {
            out << "run\tmethod=" << method_token(report.method) << "\tleft_out="
                << in.data.ids[static_cast<std::size_t>(run.left_out)]
                << "\trank_position=" << run.rank_position << '\n';
        }
    }
    for (const EvalReport& report : reports) {
        for (std::size_t i = 0; i < report.k_values.size(); ++i) {
            out << "accuracy\tmethod=" << method_token(report.method)
                << "\tk=" << report.k_values[i] << "\tvalue=" << format_percent(report.accuracy[i])
                << '\n';
        }
    }
}

}  // namespace graphrank
