#pragma once

#include <cstdint>

#include "polarmin/greedy_approx.hpp"
#include "polarmin/selection.hpp"

namespace polarmin {

struct BaselineOptions {
    std::uint64_t seed = 1;
    int dense_cap = kDefaultDenseCap;
    // Used for trajectory reporting when the system exceeds the dense cap.
    ApproxParams sketch;
};

// Polarization of the noise-driven dynamics: half the group effective
// resistance (dense route).
double exact_polarization(const GroundedSystem& sys,
                          int cap = kDefaultDenseCap);
double exact_polarization(const Graph& g, const LeaderConfig& cfg,
                          int cap = kDefaultDenseCap);

// k candidates uniformly without replacement.
SelectionResult run_random(const Graph& g, const LeaderConfig& cfg, int k,
                           BaselineOptions opts = {});

// Followers in descending weighted-degree order (ties toward smaller id);
// each is linked to min(remaining budget, available) distinct random leaders
// among its candidates, spilling to the next follower until k edges exist.
SelectionResult run_top_degree(const Graph& g, const LeaderConfig& cfg, int k,
                               BaselineOptions opts = {});

enum class CentralityReading {
    // Score = whole-graph resistance centrality Tr(inverse of the Laplacian
    // grounded at the single vertex); smallest first (most central).
    whole_graph,
    // Score = diagonal of the leader-grounded inverse (distance-to-leaders
    // reading); smallest first.
    leader_grounded,
};

// Like run_top_degree but followers are ordered by a resistance-centrality
// score instead of degree.
SelectionResult run_top_cent(const Graph& g, const LeaderConfig& cfg, int k,
                             BaselineOptions opts = {},
                             CentralityReading reading =
                                 CentralityReading::whole_graph);

struct BruteForceOptions {
    long long subset_cap = 1000000;  // max number of k-subsets to enumerate
    int dense_cap = kDefaultDenseCap;
};

// Exhaustive optimum over all k-subsets of the candidates (rank-1 chains from
// the base inverse, restarted per subset).  Ties go to the lexicographically
// smallest subset in candidate order.  Throws CapacityError when the subset
// count exceeds the cap.
SelectionResult run_brute_force(const Graph& g, const LeaderConfig& cfg, int k,
                                BruteForceOptions opts = {});

// Number of k-subsets, saturated at a large sentinel on overflow.
long long subset_count(long long n, int k);

}  // namespace polarmin
