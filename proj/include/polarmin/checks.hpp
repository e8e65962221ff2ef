#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polarmin/dynamics.hpp"
#include "polarmin/greedy_approx.hpp"

namespace polarmin {

// value lies within a (1 +- eps) band around reference.
inline bool is_eps_approx(double reference, double value, double eps) {
    return (1.0 - eps) * reference <= value &&
           value <= (1.0 + eps) * reference;
}

struct CheckReport {
    std::string name;
    bool pass = false;
    double worst = 0.0;  // worst slack/deviation observed (check-specific)
    std::string detail;
};

// Gain formula against ground truth: for every candidate, w t/(1 + w r) must
// equal the trace drop from an independently recomputed inverse (relative
// tolerance), and 0 < gain < t/r must hold.
CheckReport check_gain_identity(const Graph& g, const LeaderConfig& cfg,
                                double rel_tol = 1e-9);

// Random-instance curvature properties of the objective: adding an edge
// strictly lowers the trace (monotonicity) and gains shrink as the chosen
// set grows (supermodularity), within `slack`.
CheckReport check_curvature(int trials, int max_n, double slack,
                            std::uint64_t seed);

// Greedy no worse than (1 - 1/e) of the brute-force optimal reduction.
// Also reports the greedy/optimal final-value ratio in `worst`.
CheckReport check_greedy_bound(const Graph& g, const LeaderConfig& cfg, int k,
                               long long subset_cap = 1000000);

// Simulated polarization against half the grounded-inverse trace:
// |sim - P| <= max(3 stderr, rel_band * P).
CheckReport check_dynamics(const Graph& g, const LeaderConfig& cfg,
                           SimulationConfig sim, double rel_band = 0.05);

// Fraction of (seed, candidate) pairs whose sketched gain falls within
// (1 +- 3 eps) of the exact gain; passes at `min_fraction`.
CheckReport check_concentration(const Graph& g, const LeaderConfig& cfg,
                                double eps, int n_seeds, bool strict_delta,
                                double min_fraction = 0.9);

// Energy-norm solve contract against a dense reference solution:
// ||x - x*||_A <= delta ||x*||_A for seeded right-hand sides.
CheckReport check_solve_contract(const Graph& g, const LeaderConfig& cfg,
                                 double delta, int n_rhs, std::uint64_t seed);

}  // namespace polarmin
