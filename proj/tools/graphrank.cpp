// graphrank: rank transactions against a seed set on a k-NN similarity graph,
// evaluate methods by leave-one-out recovery, or generate synthetic data.
//
// Exit codes: 0 success, 1 validation failure, 2 numeric failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "graphrank/errors.hpp"
#include "graphrank/pipeline.hpp"
#include "graphrank/synthetic.hpp"

namespace {

struct CliOptions {
    graphrank::PipelineConfig pipeline;
    std::string method = "sym";
    std::string distance = "sqeuclidean";
    std::string mode = "direct";
    std::string output;
    bool loo = true;
};

void apply_choices(CliOptions& opt) {
    using graphrank::Distance;
    using graphrank::OperatorKind;
    using graphrank::SolverMode;

    if (opt.method == "all") {
        opt.pipeline.methods = {OperatorKind::unnormalized_laplacian, OperatorKind::random_walk,
                                OperatorKind::symmetric_normalized};
    } else if (opt.method == "unnorm") {
        opt.pipeline.methods = {OperatorKind::unnormalized_laplacian};
    } else if (opt.method == "rw") {
        opt.pipeline.methods = {OperatorKind::random_walk};
    } else {
        opt.pipeline.methods = {OperatorKind::symmetric_normalized};
    }
    opt.pipeline.graph.distance =
        opt.distance == "euclidean" ? Distance::euclidean : Distance::squared_euclidean;
    opt.pipeline.solver.mode =
        opt.mode == "iterative" ? SolverMode::iterative : SolverMode::closed_form;
    opt.pipeline.leave_one_out = opt.loo;
}

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
    auto& cfg = opt.pipeline;
    cmd->add_option("--input", cfg.input_path, "feature file, one delimited row per transaction")
        ->required();
    cmd->add_option("--seeds", cfg.seeds_spec, "seed IDs, inline (5,53,369) or a file path")
        ->required();
    cmd->add_option("--knn", cfg.graph.k, "neighbor count k")->capture_default_str();
    cmd->add_option("--bandwidth", cfg.graph.bandwidth_t, "Gaussian bandwidth t")
        ->capture_default_str();
    cmd->add_option("--distance", opt.distance, "distance function")
        ->check(CLI::IsMember({"sqeuclidean", "euclidean"}))
        ->capture_default_str();
    cmd->add_flag("--zscore", cfg.graph.standardize, "z-score each feature column first");
    cmd->add_option("--method", opt.method, "ranking method")
        ->check(CLI::IsMember({"unnorm", "rw", "sym", "all"}))
        ->capture_default_str();
    cmd->add_option("--alpha", cfg.solver.alpha, "propagation weight, in [0, 1)")
        ->capture_default_str();
    cmd->add_option("--gamma", cfg.solver.gamma, "regularization weight for unnorm")
        ->capture_default_str();
    cmd->add_option("--mode", opt.mode, "solver mode for rw/sym")
        ->check(CLI::IsMember({"iterative", "direct"}))
        ->capture_default_str();
    cmd->add_option("--tol", cfg.solver.tolerance, "iterative stop tolerance")
        ->capture_default_str();
    cmd->add_option("--max-iters", cfg.solver.max_iterations, "iterative iteration cap")
        ->capture_default_str();
    cmd->add_option("--id-base", cfg.load.id_base, "row-number origin for IDs")
        ->check(CLI::IsMember({0, 1}))
        ->capture_default_str();
    cmd->add_flag("--header", cfg.load.has_header, "skip one header row");
    cmd->add_flag("--id-column", cfg.load.id_column, "first field of each row is an integer ID");
    cmd->add_option("--output", opt.output, "write to this file instead of stdout");
}

int emit(const std::string& output_path, const std::string& text) {
    if (output_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
        throw graphrank::ValidationError("cannot open output file " + output_path);
    }
    out << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-based seed ranking over k-NN similarity graphs"};
    app.require_subcommand(1);

    CliOptions rank_opt;
    CLI::App* rank_cmd = app.add_subcommand("rank", "rank all non-seed transactions");
    add_common_flags(rank_cmd, rank_opt);

    CliOptions eval_opt;
    eval_opt.method = "all";
    CLI::App* eval_cmd =
        app.add_subcommand("eval", "leave-one-out accuracy@k comparison of the methods");
    add_common_flags(eval_cmd, eval_opt);
    eval_cmd->add_option("--topk", eval_opt.pipeline.k_values, "accuracy@k columns")
        ->delimiter(',')
        ->capture_default_str();
    eval_cmd->add_flag("--loo,!--no-loo", eval_opt.loo, "leave-one-out protocol (the only one)");

    int per_cluster = 10;
    int clusters = 3;
    double separation = 10.0;
    std::uint64_t rng_seed = 1;
    std::string gen_output;
    std::string gen_labels;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate Gaussian-blob synthetic features");
    gen_cmd->add_option("--per-cluster", per_cluster, "points per cluster")->capture_default_str();
    gen_cmd->add_option("--clusters", clusters, "number of clusters")->capture_default_str();
    gen_cmd->add_option("--separation", separation, "distance between adjacent cluster means")
        ->capture_default_str();
    gen_cmd->add_option("--rng-seed", rng_seed, "generator seed")->capture_default_str();
    gen_cmd->add_option("--output", gen_output, "feature CSV path")->required();
    gen_cmd->add_option("--labels", gen_labels, "label file path (default: <output>.labels)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (rank_cmd->parsed()) {
            apply_choices(rank_opt);
            std::ostringstream out;
            graphrank::run_rank(rank_opt.pipeline, out);
            return emit(rank_opt.output, out.str());
        }
        if (eval_cmd->parsed()) {
            apply_choices(eval_opt);
            std::ostringstream out;
            graphrank::run_eval(eval_opt.pipeline, out);
            return emit(eval_opt.output, out.str());
        }
        // gen
        const graphrank::SyntheticData data =
            graphrank::gen_synthetic(per_cluster, clusters, separation, rng_seed);
        graphrank::write_features_csv(gen_output, data.features);
        graphrank::write_labels(gen_labels.empty() ? gen_output + ".labels" : gen_labels,
                                data.labels);
        return 0;
    } catch (const graphrank::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 2;
    } catch (const graphrank::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
