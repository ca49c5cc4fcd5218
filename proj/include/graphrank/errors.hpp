#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace graphrank {

// Bad inputs: shapes, ranges, unparsable files. CLI exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Mismatched vector/matrix shapes.
class DimensionError : public ValidationError {
public:
    explicit DimensionError(const std::string& what) : ValidationError(what) {}
};

// A node with zero degree where a normalized operator was requested.
class DegenerateDegreeError : public ValidationError {
public:
    DegenerateDegreeError(Eigen::Index node, const std::string& what)
        : ValidationError(what), node_(node) {}
    Eigen::Index node() const { return node_; }

private:
    Eigen::Index node_;
};

// Numeric failures: factorization breakdown, residual out of contract. CLI exit code 2.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Iteration hit max_iterations before reaching tolerance.
// Carries the last iterate so callers can inspect how far it got.
class ConvergenceError : public NumericError {
public:
    ConvergenceError(const std::string& what, Eigen::VectorXd last_iterate, double residual,
                     int iterations)
        : NumericError(what),
          last_iterate_(std::move(last_iterate)),
          residual_(residual),
          iterations_(iterations) {}

    const Eigen::VectorXd& last_iterate() const { return last_iterate_; }
    double residual() const { return residual_; }
    int iterations() const { return iterations_; }

private:
    Eigen::VectorXd last_iterate_;
    double residual_;
    int iterations_;
};

}  // namespace graphrank
