#pragma once

#include <Eigen/Sparse>
#include <vector>

#include "polarmin/graph.hpp"
#include "polarmin/leaders.hpp"

namespace polarmin {

using SparseMat = Eigen::SparseMatrix<double, Eigen::RowMajor>;

// The Laplacian of g restricted to followers (leader rows/columns removed),
// together with the running list of added candidate edges.  Adding a
// candidate (leader v, follower u, weight w) only bumps the diagonal entry of
// u: the leader column is grounded away, so matrix + diag(bump) stays equal
// to the grounded Laplacian of the augmented graph throughout.
struct GroundedSystem {
    const Graph* g = nullptr;
    const LeaderConfig* cfg = nullptr;
    SparseMat matrix;                    // current grounded Laplacian, dim d x d
    Eigen::VectorXd diag_bump;           // total added weight per follower row
    std::vector<CandidateEdge> added;

    int dim() const { return static_cast<int>(matrix.rows()); }
    // Weight stats of the augmented graph (base edges plus added candidates).
    double w_min_current() const;
    double w_max_current() const;
};

// Builds the grounded system for a connected graph.  Throws ValidationError
// if g is disconnected (the grounded Laplacian would be singular).  The
// system points into g and cfg, so both must outlive it; the deleted
// overloads keep temporaries out.
GroundedSystem grounded_laplacian(const Graph& g, const LeaderConfig& cfg);
GroundedSystem grounded_laplacian(const Graph&, LeaderConfig&&) = delete;
GroundedSystem grounded_laplacian(Graph&&, const LeaderConfig&) = delete;
GroundedSystem grounded_laplacian(Graph&&, LeaderConfig&&) = delete;

// Adds one candidate edge in place.  Throws ValidationError if e repeats an
// already-added candidate, touches a non-leader/non-follower pair, or has
// w <= 0.
void add_candidate(GroundedSystem& sys, const CandidateEdge& e);

// Dense copy of the current grounded Laplacian (test/diagnostic use).
Eigen::MatrixXd dense_grounded(const GroundedSystem& sys);

}  // namespace polarmin
