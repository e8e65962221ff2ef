#pragma once

#include <cstdint>
#include <vector>

#include "polarmin/graph.hpp"

namespace polarmin {

// A new edge attaching follower `follower` to leader `leader`.  Only the
// follower side changes the grounded system, but both endpoints are kept for
// reporting and dedup.
struct CandidateEdge {
    int leader = 0;
    int follower = 0;
    double w = 1.0;

    friend bool operator==(const CandidateEdge& a, const CandidateEdge& b) {
        return a.leader == b.leader && a.follower == b.follower;
    }
    // Candidate order everywhere in the library: (follower id, leader id).
    friend bool operator<(const CandidateEdge& a, const CandidateEdge& b) {
        if (a.follower != b.follower) return a.follower < b.follower;
        return a.leader < b.leader;
    }
};

// Leader set plus the candidate edges that may be added, with the follower
// indexing used by every grounded-space vector and matrix: follower_row[v]
// is the row of vertex v (or -1 for leaders), followers[i] is the vertex in
// row i; rows are sorted by vertex id.
struct LeaderConfig {
    std::vector<int> leaders;             // sorted, distinct, in [0, n)
    std::vector<CandidateEdge> candidates;
    std::vector<int> followers;
    std::vector<int> follower_row;

    int q() const { return static_cast<int>(leaders.size()); }
    int follower_count() const { return static_cast<int>(followers.size()); }
    bool is_leader(int v) const { return follower_row[v] < 0; }
};

// Validates the leader set against g (distinct, in range, not all vertices)
// and builds the follower indexing.  Candidates may be filled later.
LeaderConfig make_leader_config(const Graph& g, std::vector<int> leaders);

// All (leader, follower) pairs absent from g, each with weight `w`, ordered
// by (follower id, leader id).
std::vector<CandidateEdge> candidate_universe(const Graph& g,
                                              const LeaderConfig& cfg,
                                              double w = 1.0);

// q distinct vertices sampled uniformly from g, sorted ascending.
std::vector<int> sample_leaders(const Graph& g, int q, std::uint64_t seed,
                                std::uint64_t repetition = 0);

}  // namespace polarmin
