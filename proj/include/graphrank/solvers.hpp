#pragma once

#include <optional>
#include <vector>

#include "graphrank/operators.hpp"

namespace graphrank {

// Validated set of query node indices: non-empty, unique, all in [0, n).
// Stored sorted ascending.
class SeedSet {
public:
    SeedSet(std::vector<Eigen::Index> indices, Eigen::Index n);

    const std::vector<Eigen::Index>& indices() const { return indices_; }
    Eigen::Index node_count() const { return n_; }
    std::size_t size() const { return indices_.size(); }
    bool contains(Eigen::Index i) const;

    // Remaining seeds after removing one (used by leave-one-out).
    SeedSet without(Eigen::Index i) const;

private:
    std::vector<Eigen::Index> indices_;
    Eigen::Index n_;
};

enum class SolverMode { iterative, closed_form };

const char* mode_name(SolverMode mode);

struct SolverConfig {
    double alpha = 0.85;       // propagation weight, in [0, 1); 1 would make I - aS singular
    double gamma = 1.0;        // regularization weight, > 0
    double tolerance = 1e-9;   // iteration stop: inf-norm of successive difference
    int max_iterations = 10000;
    SolverMode mode = SolverMode::closed_form;

    void validate() const;
};

struct RankingVector {
    Eigen::VectorXd scores;
    OperatorKind method;
    std::optional<int> iterations;  // nullopt for direct solves
    double residual = 0.0;
};

// y_i = 1 iff i is a seed, else 0.
Eigen::VectorXd initial_ranking(Eigen::Index n, const SeedSet& seeds);

// Power iteration F <- alpha S F + (1 - alpha) y from F = y, stopping when the
// inf-norm of the step falls below cfg.tolerance. Only the two normalized
// operator kinds admit this form. Throws ConvergenceError (carrying the last
// iterate) if max_iterations is reached first.
RankingVector propagate_iterative(const PropagationOperator& S, const Eigen::VectorXd& y,
                                  const SolverConfig& cfg);

// Direct solves of the closed forms. Each returns F with the linear-system
// residual checked against 1e-10 * max(1, |y|_inf).
//
//   solve_random_walk:           (I - alpha S_rw)  F = (1 - alpha) y   (nonsymmetric, LU)
//   solve_symmetric_normalized:  (I - alpha S_sym) F = (1 - alpha) y   (SPD, Cholesky)
//   solve_unnormalized:          (L + gamma I)     F = gamma y         (SPD, Cholesky)
RankingVector solve_random_walk(const PropagationOperator& S_rw, const Eigen::VectorXd& y,
                                double alpha);
RankingVector solve_symmetric_normalized(const PropagationOperator& S_sym,
                                         const Eigen::VectorXd& y, double alpha);
RankingVector solve_unnormalized(const PropagationOperator& L, const Eigen::VectorXd& y,
                                 double gamma);

// Same ranking as solve_symmetric_normalized with alpha = 1/(1 + gamma), but
// assembled along the regularization route ((1 + gamma) I - S_sym) F = gamma y.
// Kept as an independent algebraic path; the two must agree to solver accuracy.
RankingVector solve_symmetric_regularized(const PropagationOperator& S_sym,
                                          const Eigen::VectorXd& y, double gamma);

// Dispatch on operator kind and cfg.mode. The unnormalized method has no
// iterative form and always takes the direct route.
RankingVector solve(const PropagationOperator& op, const Eigen::VectorXd& y,
                    const SolverConfig& cfg);

// Non-excluded node indices sorted by score descending, ties broken by
// ascending index. The exclusion list may be empty.
std::vector<Eigen::Index> rank_order(const Eigen::VectorXd& scores,
                                     const std::vector<Eigen::Index>& exclude);
std::vector<Eigen::Index> rank_order(const Eigen::VectorXd& scores, const SeedSet& exclude);

}  // namespace graphrank
