#pragma once

#include <cstdint>
#include <vector>

#include "polarmin/greedy_exact.hpp"
#include "polarmin/sdd.hpp"
#include "polarmin/selection.hpp"
#include "polarmin/sketch.hpp"
#include "polarmin/solver.hpp"

namespace polarmin {

struct ApproxParams {
    double eps = 0.2;            // accuracy knob, in (0, 1/4]
    std::uint64_t seed = 1;
    // Practical mode solves to delta = eps/6 under the relative-residual
    // rule.  Strict mode derives the two solve accuracies from the
    // worst-case formulas (clamped below at 1e-12) and stops on the
    // certified energy-norm bound; intended for small contract experiments.
    bool strict_delta = false;
    int workers = 0;             // <= 0: all hardware threads
};

void validate(const ApproxParams& params);

// Solve accuracies for the two sketch families.  delta1 guards the node-space
// solves (numerator t), delta2 the edge/diagonal-space solves (denominator r).
struct DeltaPair {
    double d1 = 0.0;
    double d2 = 0.0;
};
DeltaPair solve_deltas(double n, double m, double w_min, double w_max,
                       double eps, bool strict);
DeltaPair solve_deltas(const GroundedSystem& sys, const ApproxParams& params);

// Sketched gain estimates for every candidate of the configuration.
struct SketchGains {
    std::vector<GainEstimate> gains;  // candidate order; t/r fields sketched
    Eigen::VectorXd t_hat;            // per follower row
    Eigen::VectorXd r_hat;
    int probes_done = 0;
    // Sketched group effective resistance: sum over followers of r_hat.
    double trace_estimate = 0.0;
};

// Both estimators share probe substreams, solver arithmetic and accumulation
// order; they return bit-identical results for the same seed and round.
// gains_est materializes the three solved probe blocks before reducing;
// f_gains_est streams, holding only a bounded window of probes.
SketchGains gains_est(const GroundedSystem& sys, const ApproxParams& params,
                      std::uint64_t round = 0);
SketchGains f_gains_est(const GroundedSystem& sys, const ApproxParams& params,
                        std::uint64_t round = 0);

// Trace-only variant (skips the node-space solves); used for the last
// trajectory point after the final addition.
double sketched_trace(const GroundedSystem& sys, const ApproxParams& params,
                      std::uint64_t round);

// Greedy selection with sketched gains: per round one f_gains_est pass, the
// best-estimate candidate (ties by (follower id, leader id)) is folded in as
// a diagonal bump.  trajectory holds the per-round sketched trace estimates
// (estimated = true).
SelectionResult run_approx(const Graph& g, const LeaderConfig& cfg, int k,
                           const ApproxParams& params);

}  // namespace polarmin
