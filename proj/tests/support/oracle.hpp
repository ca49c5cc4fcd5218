// Independent reference implementations used as test oracles. Everything here
// is dense, exhaustive, and deliberately avoids the library's code paths.
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "graphrank/knn_graph.hpp"

namespace oracle {

using EdgeSet = std::set<std::pair<Eigen::Index, Eigen::Index>>;

inline double distance(const Eigen::MatrixXd& X, Eigen::Index i, Eigen::Index j, bool squared) {
    double sum = 0.0;
    for (Eigen::Index f = 0; f < X.cols(); ++f) {
        const double diff = X(i, f) - X(j, f);
        sum += diff * diff;
    }
    return squared ? sum : std::sqrt(sum);
}

// Exhaustive union k-NN: full sort of all candidate distances per node, ties
// by lower index, then {i, j} kept if either direction selected it.
inline EdgeSet brute_knn_edges(const Eigen::MatrixXd& X, int k, bool squared = true) {
    const Eigen::Index n = X.rows();
    EdgeSet edges;
    for (Eigen::Index i = 0; i < n; ++i) {
        std::vector<std::pair<double, Eigen::Index>> cand;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (j != i) cand.emplace_back(distance(X, i, j, squared), j);
        }
        std::sort(cand.begin(), cand.end());
        for (int r = 0; r < k; ++r) {
            const Eigen::Index j = cand[static_cast<std::size_t>(r)].second;
            edges.emplace(std::min(i, j), std::max(i, j));
        }
    }
    return edges;
}

inline EdgeSet edge_set(const graphrank::SimilarityGraph& g) {
    EdgeSet edges;
    for (Eigen::Index c = 0; c < g.weights.outerSize(); ++c) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(g.weights, c); it; ++it) {
            edges.emplace(std::min(it.row(), it.col()), std::max(it.row(), it.col()));
        }
    }
    return edges;
}

// Dense operator construction straight from the definitions.
inline Eigen::MatrixXd dense_weights(const graphrank::SimilarityGraph& g) {
    return Eigen::MatrixXd(g.weights);
}

inline Eigen::VectorXd dense_degrees(const Eigen::MatrixXd& W) {
    return W.rowwise().sum();
}

inline Eigen::MatrixXd dense_random_walk(const Eigen::MatrixXd& W) {
    const Eigen::VectorXd d = dense_degrees(W);
    return d.cwiseInverse().asDiagonal() * W;
}

inline Eigen::MatrixXd dense_symmetric(const Eigen::MatrixXd& W) {
    const Eigen::VectorXd s = dense_degrees(W).cwiseSqrt().cwiseInverse();
    return s.asDiagonal() * W * s.asDiagonal();
}

inline Eigen::MatrixXd dense_laplacian(const Eigen::MatrixXd& W) {
    return Eigen::MatrixXd(dense_degrees(W).asDiagonal()) - W;
}

// Closed forms by dense matrix inversion.
inline Eigen::VectorXd invert_propagation(const Eigen::MatrixXd& S, const Eigen::VectorXd& y,
                                          double alpha) {
    const Eigen::MatrixXd A =
        Eigen::MatrixXd::Identity(S.rows(), S.cols()) - alpha * S;
    return (1.0 - alpha) * (A.inverse() * y);
}

inline Eigen::VectorXd invert_regularized(const Eigen::MatrixXd& L, const Eigen::VectorXd& y,
                                          double gamma) {
    const Eigen::MatrixXd A =
        L + gamma * Eigen::MatrixXd::Identity(L.rows(), L.cols());
    return gamma * (A.inverse() * y);
}

// Random test graphs. `random_weight_graph` exercises the external-graph
// entry point with arbitrary weights; `random_knn_graph` exercises the
// builder. A ring keeps every degree positive.
inline graphrank::SimilarityGraph random_weight_graph(std::mt19937_64& rng, Eigen::Index n,
                                                      double density = 0.35) {
    std::uniform_real_distribution<double> weight(0.05, 1.0);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Eigen::Triplet<double>> triplets;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const bool ring = (j == i + 1) || (i == 0 && j == n - 1);
            if (ring || coin(rng) < density) {
                const double w = weight(rng);
                triplets.emplace_back(i, j, w);
                triplets.emplace_back(j, i, w);
            }
        }
    }
    Eigen::SparseMatrix<double> W(n, n);
    W.setFromTriplets(triplets.begin(), triplets.end());
    return graphrank::SimilarityGraph::from_weights(W);
}

inline Eigen::MatrixXd random_features(std::mt19937_64& rng, Eigen::Index n, Eigen::Index m,
                                       double scale = 3.0) {
    std::uniform_real_distribution<double> coord(-scale, scale);
    Eigen::MatrixXd X(n, m);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            X(i, j) = coord(rng);
        }
    }
    return X;
}

inline graphrank::SimilarityGraph random_knn_graph(std::mt19937_64& rng, Eigen::Index n, int k,
                                                   Eigen::Index m = 3) {
    graphrank::GraphConfig cfg;
    cfg.k = k;
    return graphrank::build_knn_graph(random_features(rng, n, m), cfg);
}

inline std::vector<Eigen::Index> random_seeds(std::mt19937_64& rng, Eigen::Index n,
                                              std::size_t count) {
    std::vector<Eigen::Index> all(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(count);
    return all;
}

}  // namespace oracle
