#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "graphrank/evaluation.hpp"
#include "graphrank/io.hpp"

namespace graphrank {

// Everything one CLI invocation needs. Reports echo the effective
// configuration so any emitted number can be reproduced from the report alone.
struct PipelineConfig {
    std::string input_path;
    std::string seeds_spec;  // inline "5,53,369" or a file path
    LoadOptions load;
    GraphConfig graph;
    SolverConfig solver;
    std::vector<OperatorKind> methods = {OperatorKind::unnormalized_laplacian,
                                         OperatorKind::random_walk,
                                         OperatorKind::symmetric_normalized};
    std::vector<int> k_values = {10, 20, 30, 190};
    bool leave_one_out = true;
};

// Short CLI vocabulary for a method ("unnorm", "rw", "sym").
const char* method_token(OperatorKind kind);

// Ingest, build the graph, rank every non-seed candidate per method, and emit
// one section per method: config echo, then "rank  id  score" lines.
void run_rank(const PipelineConfig& cfg, std::ostream& out);

// Ingest, run leave-one-out per method, and emit the accuracy grid followed by
// machine-readable records (one per run and one per method x k).
void run_eval(const PipelineConfig& cfg, std::ostream& out);

}  // namespace graphrank
