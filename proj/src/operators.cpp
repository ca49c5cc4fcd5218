#include "graphrank/operators.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "graphrank/errors.hpp"
#include "graphrank/io.hpp"

namespace graphrank {

const char* kind_name(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::random_walk: return "random_walk";
        case OperatorKind::symmetric_normalized: return "symmetric_normalized";
        case OperatorKind::unnormalized_laplacian: return "unnormalized_laplacian";
    }
    return "unknown";
}

namespace {

void require_positive_degrees(const SimilarityGraph& g, OperatorKind kind) {
    for (Eigen::Index i = 0; i < g.n; ++i) {
        if (!(g.degrees[i] > 0.0)) {
            std::ostringstream msg;
            msg << "node " << i << " has zero degree; " << kind_name(kind)
                << " operator is undefined";
            throw DegenerateDegreeError(i, msg.str());
        }
    }
}

}  // namespace

PropagationOperator make_operator(const SimilarityGraph& g, OperatorKind kind) {
    if (g.degrees.size() != g.n || g.weights.rows() != g.n || g.weights.cols() != g.n) {
        throw DimensionError("similarity graph fields are inconsistent");
    }

    PropagationOperator op;
    op.kind = kind;

    switch (kind) {
        case OperatorKind::random_walk: {
            require_positive_degrees(g, kind);
            op.matrix = g.weights;
            for (Eigen::Index c = 0; c < op.matrix.outerSize(); ++c) {
                for (Eigen::SparseMatrix<double>::InnerIterator it(op.matrix, c); it; ++it) {
                    it.valueRef() /= g.degrees[it.row()];
                }
            }
            break;
        }
        case OperatorKind::symmetric_normalized: {
            require_positive_degrees(g, kind);
            const Eigen::VectorXd inv_sqrt_d = g.degrees.array().rsqrt();
            op.matrix = g.weights;
            for (Eigen::Index c = 0; c < op.matrix.outerSize(); ++c) {
                for (Eigen::SparseMatrix<double>::InnerIterator it(op.matrix, c); it; ++it) {
                    it.valueRef() *= inv_sqrt_d[it.row()] * inv_sqrt_d[it.col()];
                }
            }
            break;
        }
        case OperatorKind::unnormalized_laplacian: {
            std::vector<Eigen::Triplet<double>> triplets;
            triplets.reserve(static_cast<std::size_t>(g.weights.nonZeros() + g.n));
            for (Eigen::Index c = 0; c < g.weights.outerSize(); ++c) {
                for (Eigen::SparseMatrix<double>::InnerIterator it(g.weights, c); it; ++it) {
                    triplets.emplace_back(it.row(), it.col(), -it.value());
                }
            }
            for (Eigen::Index i = 0; i < g.n; ++i) {
                triplets.emplace_back(i, i, g.degrees[i]);
            }
            op.matrix.resize(g.n, g.n);
            op.matrix.setFromTriplets(triplets.begin(), triplets.end());
            break;
        }
    }
    op.matrix.makeCompressed();
    return op;
}

std::string coordinate_text(const PropagationOperator& op) {
    std::ostringstream out;
    out << "# " << kind_name(op.kind) << ' ' << op.matrix.rows() << ' ' << op.matrix.cols() << ' '
        << op.matrix.nonZeros() << '\n';
    for (Eigen::Index c = 0; c < op.matrix.outerSize(); ++c) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(op.matrix, c); it; ++it) {
            out << it.row() << ' ' << it.col() << ' ' << format_double(it.value()) << '\n';
        }
    }
    return out.str();
}

}  // namespace graphrank
