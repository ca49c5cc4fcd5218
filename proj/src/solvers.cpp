#include "graphrank/solvers.hpp"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "graphrank/errors.hpp"

namespace graphrank {

SeedSet::SeedSet(std::vector<Eigen::Index> indices, Eigen::Index n) : indices_(std::move(indices)), n_(n) {
    if (indices_.empty()) {
        throw ValidationError("seed set must not be empty");
    }
    std::sort(indices_.begin(), indices_.end());
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (indices_[i] < 0 || indices_[i] >= n_) {
            std::ostringstream msg;
            msg << "seed index " << indices_[i] << " out of range [0, " << n_ << ")";
            throw ValidationError(msg.str());
        }
        if (i > 0 && indices_[i] == indices_[i - 1]) {
            throw ValidationError("duplicate seed index " + std::to_string(indices_[i]));
        }
    }
}

bool SeedSet::contains(Eigen::Index i) const {
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

SeedSet SeedSet::without(Eigen::Index i) const {
    std::vector<Eigen::Index> rest;
    rest.reserve(indices_.size());
    for (Eigen::Index s : indices_) {
        if (s != i) rest.push_back(s);
    }
    if (rest.size() == indices_.size()) {
        throw ValidationError("index " + std::to_string(i) + " is not in the seed set");
    }
    return SeedSet(std::move(rest), n_);
}

const char* mode_name(SolverMode mode) {
    return mode == SolverMode::iterative ? "iterative" : "direct";
}

void SolverConfig::validate() const {
    if (!(alpha >= 0.0) || !(alpha < 1.0)) {
        throw ValidationError("alpha must lie in [0, 1); I - alpha*S is singular at alpha = 1");
    }
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw ValidationError("gamma must be positive and finite");
    }
    if (!(tolerance > 0.0)) {
        throw ValidationError("tolerance must be positive");
    }
    if (max_iterations < 1) {
        throw ValidationError("max_iterations must be at least 1");
    }
}

Eigen::VectorXd initial_ranking(Eigen::Index n, const SeedSet& seeds) {
    if (seeds.node_count() != n) {
        throw DimensionError("seed set was validated against a different node count");
    }
    Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
    for (Eigen::Index s : seeds.indices()) {
        y[s] = 1.0;
    }
    return y;
}

namespace {

void check_vector(const PropagationOperator& op, const Eigen::VectorXd& y) {
    if (y.size() != op.n()) {
        std::ostringstream msg;
        msg << "ranking vector length " << y.size() << " does not match operator size " << op.n();
        throw DimensionError(msg.str());
    }
    if (!y.allFinite()) {
        throw ValidationError("initial ranking vector must be finite");
    }
}

double residual_bound(const Eigen::VectorXd& y) {
    return 1e-10 * std::max(1.0, y.lpNorm<Eigen::Infinity>());
}

// Direct LU solves leave sign noise of order machine epsilon on entries that
// are exactly zero in exact arithmetic (nodes unreachable from every seed).
// Snap those to zero so nonnegative inputs give nonnegative rankings.
void snap_sign_noise(Eigen::VectorXd& f) {
    const double floor = -1e-13 * std::max(1.0, f.lpNorm<Eigen::Infinity>());
    for (Eigen::Index i = 0; i < f.size(); ++i) {
        if (f[i] < 0.0 && f[i] >= floor) {
            f[i] = 0.0;
        }
    }
}

RankingVector finish_direct(const Eigen::SparseMatrix<double>& A, Eigen::VectorXd f,
                            const Eigen::VectorXd& rhs, const Eigen::VectorXd& y,
                            OperatorKind kind, bool nonnegative) {
    const double residual = (A * f - rhs).lpNorm<Eigen::Infinity>();
    if (!(residual <= residual_bound(y)) || !f.allFinite()) {
        std::ostringstream msg;
        msg << kind_name(kind) << " direct solve residual " << residual
            << " exceeds contract " << residual_bound(y);
        throw NumericError(msg.str());
    }
    if (nonnegative) {
        snap_sign_noise(f);
    }
    return RankingVector{std::move(f), kind, std::nullopt, residual};
}

Eigen::SparseMatrix<double> identity_minus(double alpha, const Eigen::SparseMatrix<double>& S) {
    Eigen::SparseMatrix<double> I(S.rows(), S.cols());
    I.setIdentity();
    Eigen::SparseMatrix<double> A = I - alpha * S;
    A.makeCompressed();
    return A;
}

Eigen::VectorXd cholesky_solve(const Eigen::SparseMatrix<double>& A, const Eigen::VectorXd& rhs,
                               const char* what) {
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver;
    solver.compute(A);
    if (solver.info() != Eigen::Success) {
        throw NumericError(std::string(what) + ": LDLT factorization failed");
    }
    Eigen::VectorXd f = solver.solve(rhs);
    if (solver.info() != Eigen::Success) {
        throw NumericError(std::string(what) + ": LDLT solve failed");
    }
    return f;
}

}  // namespace

RankingVector propagate_iterative(const PropagationOperator& S, const Eigen::VectorXd& y,
                                  const SolverConfig& cfg) {
    if (S.kind == OperatorKind::unnormalized_laplacian) {
        throw ValidationError(
            "the unnormalized method has no iterative form; use the closed-form solve");
    }
    cfg.validate();
    check_vector(S, y);

    Eigen::VectorXd f = y;
    Eigen::VectorXd next(y.size());
    double step = 0.0;
    for (int t = 1; t <= cfg.max_iterations; ++t) {
        next.noalias() = cfg.alpha * (S.matrix * f);
        next += (1.0 - cfg.alpha) * y;
        step = (next - f).lpNorm<Eigen::Infinity>();
        f.swap(next);
        if (step < cfg.tolerance) {
            if (!f.allFinite()) {
                throw NumericError(std::string(kind_name(S.kind)) +
                                   " propagation produced non-finite values");
            }
            return RankingVector{std::move(f), S.kind, t, step};
        }
    }
    std::ostringstream msg;
    msg << kind_name(S.kind) << " propagation did not reach tolerance " << cfg.tolerance
        << " within " << cfg.max_iterations << " iterations (last step " << step << ")";
    throw ConvergenceError(msg.str(), std::move(f), step, cfg.max_iterations);
}

RankingVector solve_random_walk(const PropagationOperator& S_rw, const Eigen::VectorXd& y,
                                double alpha) {
    if (S_rw.kind != OperatorKind::random_walk) {
        throw ValidationError("solve_random_walk expects the random_walk operator");
    }
    if (!(alpha >= 0.0) || !(alpha < 1.0)) {
        throw ValidationError("alpha must lie in [0, 1)");
    }
    check_vector(S_rw, y);

    const Eigen::SparseMatrix<double> A = identity_minus(alpha, S_rw.matrix);
    const Eigen::VectorXd rhs = (1.0 - alpha) * y;

    Eigen::SparseLU<Eigen::SparseMatrix<double>> solver;
    solver.compute(A);
    if (solver.info() != Eigen::Success) {
        throw NumericError("random_walk system: LU factorization failed");
    }
    Eigen::VectorXd f = solver.solve(rhs);
    if (solver.info() != Eigen::Success) {
        throw NumericError("random_walk system: LU solve failed");
    }
    return finish_direct(A, std::move(f), rhs, y, OperatorKind::random_walk, y.minCoeff() >= 0.0);
}

RankingVector solve_symmetric_normalized(const PropagationOperator& S_sym,
                                         const Eigen::VectorXd& y, double alpha) {
    if (S_sym.kind != OperatorKind::symmetric_normalized) {
        throw ValidationError("solve_symmetric_normalized expects the symmetric_normalized operator");
    }
    if (!(alpha >= 0.0) || !(alpha < 1.0)) {
        throw ValidationError("alpha must lie in [0, 1)");
    }
    check_vector(S_sym, y);

    // Eigenvalues of S_sym lie in [-1, 1], so I - alpha*S_sym is SPD for alpha < 1.
    const Eigen::SparseMatrix<double> A = identity_minus(alpha, S_sym.matrix);
    const Eigen::VectorXd rhs = (1.0 - alpha) * y;
    Eigen::VectorXd f = cholesky_solve(A, rhs, "symmetric_normalized system");
    return finish_direct(A, std::move(f), rhs, y, OperatorKind::symmetric_normalized,
                         y.minCoeff() >= 0.0);
}

RankingVector solve_symmetric_regularized(const PropagationOperator& S_sym,
                                          const Eigen::VectorXd& y, double gamma) {
    if (S_sym.kind != OperatorKind::symmetric_normalized) {
        throw ValidationError("solve_symmetric_regularized expects the symmetric_normalized operator");
    }
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw ValidationError("gamma must be positive and finite");
    }
    check_vector(S_sym, y);

    Eigen::SparseMatrix<double> I(S_sym.matrix.rows(), S_sym.matrix.cols());
    I.setIdentity();
    Eigen::SparseMatrix<double> A = (1.0 + gamma) * I - S_sym.matrix;
    A.makeCompressed();
    const Eigen::VectorXd rhs = gamma * y;
    Eigen::VectorXd f = cholesky_solve(A, rhs, "symmetric regularized system");
    return finish_direct(A, std::move(f), rhs, y, OperatorKind::symmetric_normalized,
                         y.minCoeff() >= 0.0);
}

RankingVector solve_unnormalized(const PropagationOperator& L, const Eigen::VectorXd& y,
                                 double gamma) {
    if (L.kind != OperatorKind::unnormalized_laplacian) {
        throw ValidationError("solve_unnormalized expects the unnormalized_laplacian operator");
    }
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw ValidationError("gamma must be positive and finite");
    }
    check_vector(L, y);

    Eigen::SparseMatrix<double> I(L.matrix.rows(), L.matrix.cols());
    I.setIdentity();
    Eigen::SparseMatrix<double> A = L.matrix + gamma * I;
    A.makeCompressed();
    const Eigen::VectorXd rhs = gamma * y;
    Eigen::VectorXd f = cholesky_solve(A, rhs, "unnormalized system");
    return finish_direct(A, std::move(f), rhs, y, OperatorKind::unnormalized_laplacian, false);
}

RankingVector solve(const PropagationOperator& op, const Eigen::VectorXd& y,
                    const SolverConfig& cfg) {
    cfg.validate();
    switch (op.kind) {
        case OperatorKind::random_walk:
            return cfg.mode == SolverMode::iterative ? propagate_iterative(op, y, cfg)
                                                     : solve_random_walk(op, y, cfg.alpha);
        case OperatorKind::symmetric_normalized:
            return cfg.mode == SolverMode::iterative
                       ? propagate_iterative(op, y, cfg)
                       : solve_symmetric_normalized(op, y, cfg.alpha);
        case OperatorKind::unnormalized_laplacian:
            // No iterative form exists for this method; mode is ignored.
            return solve_unnormalized(op, y, cfg.gamma);
    }
    throw ValidationError("unknown operator kind");
}

std::vector<Eigen::Index> rank_order(const Eigen::VectorXd& scores,
                                     const std::vector<Eigen::Index>& exclude) {
    std::vector<bool> excluded(static_cast<std::size_t>(scores.size()), false);
    for (Eigen::Index e : exclude) {
        if (e < 0 || e >= scores.size()) {
            throw ValidationError("excluded index " + std::to_string(e) + " out of range");
        }
        excluded[static_cast<std::size_t>(e)] = true;
    }
    std::vector<Eigen::Index> order;
    order.reserve(static_cast<std::size_t>(scores.size()));
    for (Eigen::Index i = 0; i < scores.size(); ++i) {
        if (!excluded[static_cast<std::size_t>(i)]) {
            order.push_back(i);
        }
    }
    std::sort(order.begin(), order.end(), [&scores](Eigen::Index a, Eigen::Index b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return a < b;
    });
    return order;
}

std::vector<Eigen::Index> rank_order(const Eigen::VectorXd& scores, const SeedSet& exclude) {
    return rank_order(scores, exclude.indices());
}

}  // namespace graphrank
