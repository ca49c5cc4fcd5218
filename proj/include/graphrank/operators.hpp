#pragma once

#include <string>

#include "graphrank/knn_graph.hpp"

namespace graphrank {

enum class OperatorKind { random_walk, symmetric_normalized, unnormalized_laplacian };

const char* kind_name(OperatorKind kind);

// One of the three propagation operators derived from a SimilarityGraph:
//   random_walk            S_rw  = D^-1 W          (row-stochastic)
//   symmetric_normalized   S_sym = D^-1/2 W D^-1/2  (symmetric, same spectrum as S_rw)
//   unnormalized_laplacian L     = D - W            (symmetric positive semi-definite)
struct PropagationOperator {
    OperatorKind kind;
    Eigen::SparseMatrix<double> matrix;

    Eigen::Index n() const { return matrix.rows(); }
};

// The two normalized kinds require every degree to be strictly positive and
// throw DegenerateDegreeError naming the first offending node otherwise.
PropagationOperator make_operator(const SimilarityGraph& g, OperatorKind kind);

// Debug dump in coordinate format, one "row col value" line per stored entry.
std::string coordinate_text(const PropagationOperator& op);

}  // namespace graphrank
