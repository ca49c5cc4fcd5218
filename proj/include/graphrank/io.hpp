#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphrank/knn_graph.hpp"
#include "graphrank/solvers.hpp"

namespace graphrank {

struct LoadOptions {
    bool has_header = false;  // skip the first line
    bool id_column = false;   // first field of each row is an integer ID
    int id_base = 1;          // row-number origin when there is no ID column
};

// Feature rows plus the external ID of each row. Without an ID column, row i
// gets ID i + id_base.
struct Dataset {
    FeatureMatrix features;
    std::vector<std::int64_t> ids;

    Eigen::Index rows() const { return features.rows(); }
};

// Delimited text, one row per transaction. Fields split on comma or tab
// (auto-detected from the first data line). Errors name the file and line.
Dataset load_features(const std::string& path, const LoadOptions& opts);

// "5,53,369" inline, or a path to a file of whitespace/comma-separated IDs.
std::vector<std::int64_t> parse_seed_spec(const std::string& spec);

// Map external seed IDs to internal indices; unknown IDs are an error.
SeedSet resolve_seeds(const Dataset& data, const std::vector<std::int64_t>& seed_ids);

// Locale-independent formatting used everywhere output must be byte-stable.
std::string format_double(double value, int significant_digits = 12);
std::string format_percent(double value);  // two decimals

}  // namespace graphrank
