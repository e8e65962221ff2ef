#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>

#include "polarmin/grounded.hpp"

namespace polarmin {

// Euler-Maruyama discretization of the noise-driven consensus dynamics on
// the followers (leaders pinned at 0):
//   x <- x - dt * (L_Q x) + noise * sqrt(dt) * xi,   xi ~ N(0, I).
// The long-run average of sum_u x_u^2 estimates the polarization, i.e. half
// the group effective resistance.
struct SimulationConfig {
    double dt = 0.0;         // 0: pick 0.1 * stability_bound
    double t_burn = 200.0;   // settle-in time discarded per path
    double t_sample = 400.0; // averaged time per path
    int paths = 16;
    int batches_per_path = 8;  // batch means for the standard error
    double noise = 1.0;        // stddev multiplier; 0 gives pure decay
    Eigen::VectorXd start;     // empty: all zeros
    std::uint64_t seed = 1;
    int workers = 0;
    std::ostream* dump = nullptr;  // optional "t,follower,x" rows, path 0
    int dump_stride = 10;
};

struct PolarizationEstimate {
    double value = 0.0;
    double stderr_ = 0.0;
    double dt = 0.0;
    long long steps_per_path = 0;
    int batches = 0;
    // Mean of sum x^2 over the final sampling step of each path (used by the
    // decay checks).
    double final_step_mean = 0.0;
};

// Largest stable step size 2 / lambda_max(L_Q), with lambda_max from power
// iteration.
double stability_bound(const GroundedSystem& sys);

// Runs `paths` independent trajectories and averages sum_u x_u^2 over the
// sampling window.  Throws ValidationError if dt breaches the stability
// bound.  Results are deterministic in (seed, paths); worker count only
// changes scheduling.
PolarizationEstimate simulate(const Graph& g, const LeaderConfig& cfg,
                              const SimulationConfig& sim);
PolarizationEstimate simulate(const GroundedSystem& sys,
                              const SimulationConfig& sim);

}  // namespace polarmin
