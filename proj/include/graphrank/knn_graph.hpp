#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <string>

namespace graphrank {

// One row per transaction, one column per feature.
using FeatureMatrix = Eigen::MatrixXd;

enum class Distance { squared_euclidean, euclidean };

const char* distance_name(Distance d);

struct GraphConfig {
    int k = 5;                                          // neighbor count, 1 <= k <= n-1
    double bandwidth_t = 1.0;                           // Gaussian bandwidth, > 0
    Distance distance = Distance::squared_euclidean;
    bool standardize = false;                           // optional per-column z-scoring
};

// Undirected weighted similarity graph. `weights` is symmetric with a zero
// diagonal and strictly positive stored entries in (0, 1]; `degrees[i]` is the
// sum of the stored entries of row i.
struct SimilarityGraph {
    Eigen::Index n = 0;
    Eigen::SparseMatrix<double> weights;
    Eigen::VectorXd degrees;

    // Wraps an externally assembled weight matrix. Validates symmetry (exact),
    // zero diagonal, and the (0, 1] entry range; explicit zeros are pruned.
    // Isolated nodes are allowed here and rejected later by the normalized
    // operators.
    static SimilarityGraph from_weights(const Eigen::SparseMatrix<double>& W);

    Eigen::Index edge_count() const { return weights.nonZeros() / 2; }
    bool has_edge(Eigen::Index i, Eigen::Index j) const { return weights.coeff(i, j) != 0.0; }
};

// exp(-d(xi, xj) / t). The result is in (0, 1]; distances so large that the
// exponential underflows are clamped to the smallest positive double so a
// stored edge is never zero.
double gaussian_similarity(const Eigen::RowVectorXd& xi, const Eigen::RowVectorXd& xj,
                           double bandwidth_t, Distance distance);

// n >= 2, m >= 1, every entry finite.
void validate_features(const FeatureMatrix& X);

// Union k-NN rule: edge {i, j} exists iff i is among the k nearest neighbors
// of j or j is among the k nearest neighbors of i. Distance ties at the k-th
// boundary are broken by lower node index; a node is never its own neighbor.
SimilarityGraph build_knn_graph(const FeatureMatrix& X, const GraphConfig& cfg);

// Debug dump, one "i j weight" line per undirected edge (i < j).
std::string edge_list_text(const SimilarityGraph& g);

}  // namespace graphrank
