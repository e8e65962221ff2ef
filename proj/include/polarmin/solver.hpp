#pragma once

#include <Eigen/Dense>
#include <Eigen/IterativeLinearSolvers>
#include <cstdint>
#include <string>

#include "polarmin/grounded.hpp"

namespace polarmin {

// Row-major dense block: one column per right-hand side.
using RowBlock =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class StopRule {
    // Stop when ||r||/||b|| <= delta * sqrt(lambda_lower/lambda_upper).  The
    // certified eigenvalue bounds turn this into a guarantee on the relative
    // error in the energy norm: ||x - A^{-1}b||_A <= delta ||A^{-1}b||_A.
    energy_norm,
    // Stop when ||r||/||b|| <= delta.  In practice CG minimizes the energy
    // norm directly, so this cheap criterion tracks the same contract.
    relative_residual,
};

enum class Precond { jacobi, incomplete_cholesky };

struct SolveOptions {
    StopRule rule = StopRule::relative_residual;
    Precond precond = Precond::jacobi;
    int max_iterations = 0;  // 0: 40 * sqrt(d) + 200
};

struct SolveStats {
    long long solves = 0;
    long long iterations = 0;
    long long energy_norm_stops = 0;
    long long residual_stops = 0;
    const char* criterion() const {
        if (energy_norm_stops && !residual_stops) return "energy_norm";
        if (residual_stops && !energy_norm_stops) return "relative_residual";
        return residual_stops ? "mixed" : "none";
    }
};

// Preconditioned-CG handle for one grounded Laplacian.  lambda_lower uses the
// w_min/n^2 spectral floor of connected-graph grounded Laplacians;
// lambda_upper is the tighter of the n^2 w_max ceiling and the Gershgorin row
// bound, both certified, so the energy-norm rule never overstates accuracy.
class SolveHandle {
  public:
    SolveHandle(const GroundedSystem& sys, SolveOptions opts = {});

    // Solves A x = b to relative accuracy delta under the configured rule.
    // Deterministic; independent of how many solves run concurrently.
    // Throws ConvergenceError (with achieved residual) on iteration cap.
    Eigen::VectorXd solve(const Eigen::VectorXd& b, double delta);

    // Batched variant: column c of `rhs` solved to accuracy `deltas[c]`.
    // Each column follows exactly the arithmetic of a standalone solve, so
    // the batch split can never change results.
    RowBlock solve_block(const RowBlock& rhs, const Eigen::VectorXd& deltas);

    double lambda_lower() const { return lambda_lower_; }
    double lambda_upper() const { return lambda_upper_; }
    const SolveStats& stats() const { return stats_; }
    const SolveOptions& options() const { return opts_; }

  private:
    const SparseMat* mat_;
    SolveOptions opts_;
    Eigen::VectorXd inv_diag_;
    Eigen::IncompleteCholesky<double, Eigen::Lower, Eigen::NaturalOrdering<int>>
        ic_;
    double lambda_lower_ = 0.0;
    double lambda_upper_ = 0.0;
    int max_iter_ = 0;
    SolveStats stats_;
};

// One-shot convenience wrapper over SolveHandle::solve.
Eigen::VectorXd sdd_solve(const GroundedSystem& sys, const Eigen::VectorXd& b,
                          double delta, SolveOptions opts = {});

// Largest-eigenvalue estimate by power iteration (deterministic start from
// `seed`), converged to a 1e-8 relative Rayleigh increment.
double largest_eigenvalue(const SparseMat& a, std::uint64_t seed = 12345);

}  // namespace polarmin
