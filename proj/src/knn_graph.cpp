#include "graphrank/knn_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

#include "graphrank/errors.hpp"
#include "graphrank/io.hpp"

namespace graphrank {

const char* distance_name(Distance d) {
    return d == Distance::squared_euclidean ? "squared_euclidean" : "euclidean";
}

namespace {

// exp underflows to 0 past d/t ~ 745; keep stored weights strictly positive.
double gaussian_from_distance(double dist, double bandwidth_t) {
    const double w = std::exp(-dist / bandwidth_t);
    return w > 0.0 ? w : std::numeric_limits<double>::min();
}

// Sequential accumulation, so the value does not depend on SIMD reduction
// order and ties resolve identically everywhere.
double row_distance(const FeatureMatrix& X, Eigen::Index i, Eigen::Index j, Distance distance) {
    double sum = 0.0;
    for (Eigen::Index f = 0; f < X.cols(); ++f) {
        const double diff = X(i, f) - X(j, f);
        sum += diff * diff;
    }
    return distance == Distance::euclidean ? std::sqrt(sum) : sum;
}

void validate_graph_config(const GraphConfig& cfg, Eigen::Index n) {
    if (cfg.k < 1 || cfg.k > n - 1) {
        std::ostringstream msg;
        msg << "k = " << cfg.k << " out of range [1, " << n - 1 << "] for " << n << " nodes";
        throw ValidationError(msg.str());
    }
    if (!(cfg.bandwidth_t > 0.0) || !std::isfinite(cfg.bandwidth_t)) {
        throw ValidationError("bandwidth t must be a positive finite number");
    }
}

FeatureMatrix standardized(const FeatureMatrix& X) {
    FeatureMatrix Z = X;
    const auto n = static_cast<double>(X.rows());
    for (Eigen::Index c = 0; c < X.cols(); ++c) {
        const double mean = X.col(c).sum() / n;
        const double var = (X.col(c).array() - mean).square().sum() / (n - 1.0);
        const double sd = std::sqrt(var);
        if (sd > 0.0) {
            Z.col(c) = (X.col(c).array() - mean) / sd;
        } else {
            Z.col(c).setZero();  // constant column carries no neighbor information
        }
    }
    return Z;
}

Eigen::VectorXd stored_row_sums(const Eigen::SparseMatrix<double>& W) {
    // W is symmetric, so the inner sum down column i equals the row-i sum,
    // term for term.
    Eigen::VectorXd d = Eigen::VectorXd::Zero(W.rows());
    for (Eigen::Index c = 0; c < W.outerSize(); ++c) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(W, c); it; ++it) {
            d[c] += it.value();
        }
    }
    return d;
}

}  // namespace

double gaussian_similarity(const Eigen::RowVectorXd& xi, const Eigen::RowVectorXd& xj,
                           double bandwidth_t, Distance distance) {
    if (xi.size() != xj.size()) {
        std::ostringstream msg;
        msg << "feature rows differ in length: " << xi.size() << " vs " << xj.size();
        throw DimensionError(msg.str());
    }
    if (!(bandwidth_t > 0.0) || !std::isfinite(bandwidth_t)) {
        throw ValidationError("bandwidth t must be a positive finite number");
    }
    if (!xi.allFinite() || !xj.allFinite()) {
        throw ValidationError("feature rows must be finite");
    }
    double sum = 0.0;
    for (Eigen::Index f = 0; f < xi.size(); ++f) {
        const double diff = xi[f] - xj[f];
        sum += diff * diff;
    }
    const double dist = distance == Distance::euclidean ? std::sqrt(sum) : sum;
    return gaussian_from_distance(dist, bandwidth_t);
}

void validate_features(const FeatureMatrix& X) {
    if (X.rows() < 2) {
        throw ValidationError("feature matrix needs at least 2 rows, got " +
                              std::to_string(X.rows()));
    }
    if (X.cols() < 1) {
        throw ValidationError("feature matrix needs at least 1 column");
    }
    if (!X.allFinite()) {
        throw ValidationError("feature matrix contains NaN or Inf");
    }
}

SimilarityGraph SimilarityGraph::from_weights(const Eigen::SparseMatrix<double>& W) {
    if (W.rows() != W.cols()) {
        throw DimensionError("weight matrix must be square");
    }
    SimilarityGraph g;
    g.n = W.rows();
    g.weights = W;
    g.weights.prune([](Eigen::Index, Eigen::Index, double v) { return v != 0.0; });
    g.weights.makeCompressed();

    for (Eigen::Index c = 0; c < g.weights.outerSize(); ++c) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(g.weights, c); it; ++it) {
            if (it.row() == it.col()) {
                throw ValidationError("weight matrix has a nonzero diagonal at node " +
                                      std::to_string(it.row()));
            }
            if (!(it.value() > 0.0) || it.value() > 1.0 || !std::isfinite(it.value())) {
                std::ostringstream msg;
                msg << "weight (" << it.row() << ", " << it.col() << ") = " << it.value()
                    << " outside (0, 1]";
                throw ValidationError(msg.str());
            }
            if (g.weights.coeff(it.col(), it.row()) != it.value()) {
                std::ostringstream msg;
                msg << "weight matrix not symmetric at (" << it.row() << ", " << it.col() << ")";
                throw ValidationError(msg.str());
            }
        }
    }

    g.degrees = stored_row_sums(g.weights);
    return g;
}

SimilarityGraph build_knn_graph(const FeatureMatrix& X, const GraphConfig& cfg) {
    validate_features(X);
    const Eigen::Index n = X.rows();
    validate_graph_config(cfg, n);

    const FeatureMatrix& F = cfg.standardize ? standardized(X) : X;

    // k nearest neighbors per node, self excluded, ties by lower index.
    std::vector<std::vector<Eigen::Index>> neighbors(static_cast<std::size_t>(n));
    std::vector<std::pair<double, Eigen::Index>> cand;
    cand.reserve(static_cast<std::size_t>(n) - 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        cand.clear();
        for (Eigen::Index j = 0; j < n; ++j) {
            if (j == i) continue;
            cand.emplace_back(row_distance(F, i, j, cfg.distance), j);
        }
        std::partial_sort(cand.begin(), cand.begin() + cfg.k, cand.end());
        auto& nb = neighbors[static_cast<std::size_t>(i)];
        nb.reserve(static_cast<std::size_t>(cfg.k));
        for (int r = 0; r < cfg.k; ++r) {
            nb.push_back(cand[static_cast<std::size_t>(r)].second);
        }
    }

    // Union rule: keep {i, j} if either direction selected it.
    std::vector<std::pair<Eigen::Index, Eigen::Index>> edges;
    edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(cfg.k));
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j : neighbors[static_cast<std::size_t>(i)]) {
            edges.emplace_back(std::min(i, j), std::max(i, j));
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(edges.size() * 2);
    for (const auto& [i, j] : edges) {
        const double w =
            gaussian_from_distance(row_distance(F, i, j, cfg.distance), cfg.bandwidth_t);
        triplets.emplace_back(i, j, w);
        triplets.emplace_back(j, i, w);
    }

    SimilarityGraph g;
    g.n = n;
    g.weights.resize(n, n);
    g.weights.setFromTriplets(triplets.begin(), triplets.end());
    g.weights.makeCompressed();
    g.degrees = stored_row_sums(g.weights);
    return g;
}

std::string edge_list_text(const SimilarityGraph& g) {
    std::ostringstream out;
    for (Eigen::Index c = 0; c < g.weights.outerSize(); ++c) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(g.weights, c); it; ++it) {
            if (it.row() < it.col()) {
                out << it.row() << ' ' << it.col() << ' ' << format_double(it.value()) << '\n';
            }
        }
    }
    return out.str();
}

}  // namespace graphrank
