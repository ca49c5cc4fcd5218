#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphrank/knn_graph.hpp"

namespace graphrank {

struct SyntheticData {
    FeatureMatrix features;  // (n_per_cluster * n_clusters) x 5
    std::vector<int> labels; // cluster index per row
};

// Unit-variance Gaussian blobs in 5 dimensions, cluster c centered at
// c * separation along the first axis, rows ordered cluster by cluster.
// Deterministic given rng_seed (the normal deviates are generated by an
// explicit Box-Muller transform over mt19937_64, not std::normal_distribution,
// so the bytes do not depend on the standard library).
SyntheticData gen_synthetic(int n_per_cluster, int n_clusters, double separation,
                            std::uint64_t rng_seed);

void write_features_csv(const std::string& path, const FeatureMatrix& X);
void write_labels(const std::string& path, const std::vector<int>& labels);

}  // namespace graphrank
