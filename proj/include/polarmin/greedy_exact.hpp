#pragma once

#include <vector>

#include "polarmin/dense_inverse.hpp"
#include "polarmin/selection.hpp"

namespace polarmin {

// Marginal drop in group effective resistance for one candidate edge,
// computed from the maintained inverse:
//   t = ||inv e_u||^2,  r = (inv)_uu,  gain = w t / (1 + w r).
// Always 0 < gain < t / r.
struct GainEstimate {
    CandidateEdge edge;
    double t = 0.0;
    double r = 0.0;
    double gain = 0.0;
};

// Group effective resistance Tr(inverse of the grounded Laplacian), dense
// route.  Throws CapacityError above `cap`.
double effective_resistance(const GroundedSystem& sys,
                            int cap = kDefaultDenseCap);
inline double effective_resistance(const DenseInverse& invm) {
    return invm.trace();
}

// Gains for every candidate against the current inverse, in candidate order.
std::vector<GainEstimate> exact_gains(
    const DenseInverse& invm, const LeaderConfig& cfg,
    const std::vector<CandidateEdge>& candidates);

struct ExactOptions {
    int dense_cap = kDefaultDenseCap;
};

// Greedy selection of k candidate edges with rank-1 inverse maintenance.
// Per round: score all remaining candidates, take the largest gain (ties by
// (follower id, leader id)), fold the pick into the inverse.  The reported
// trajectory is the exact trace after each pick.
SelectionResult run_exact(const Graph& g, const LeaderConfig& cfg, int k,
                          ExactOptions opts = {});

}  // namespace polarmin
