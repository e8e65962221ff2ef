#pragma once

#include <Eigen/Dense>
#include <vector>

#include "polarmin/grounded.hpp"

namespace polarmin {

// Split of a grounded Laplacian into  B'^T W' B' + X:
//   B'  signed incidence of follower-follower edges (one row per edge,
//       +1 at the lower follower row, -1 at the higher),
//   W'  their weights,
//   X   diagonal of leader-coupling weight plus any added candidate weight.
// The split lets squared solution norms against the matrix be read off as
//   e_u^T A^{-1} e_u = ||W'^{1/2} B' A^{-1} e_u||^2 + ||X^{1/2} A^{-1} e_u||^2,
// which is what the edge- and diagonal-space sketches estimate.
struct SddDecomposition {
    struct IncidenceRow {
        int head = 0;   // follower row receiving +1
        int tail = 0;   // follower row receiving -1
        double w = 0.0;
    };
    std::vector<IncidenceRow> rows;  // ordered by (head, tail)
    Eigen::VectorXd x_diag;          // dim d

    int edge_count() const { return static_cast<int>(rows.size()); }

    // y = B'^T W'^{1/2} q for an edge-space vector q (length edge_count()).
    Eigen::VectorXd incidence_weighted_transpose(const Eigen::VectorXd& q) const;
    // y = W'^{1/2} B' z for a follower-space vector z.
    Eigen::VectorXd incidence_weighted_apply(const Eigen::VectorXd& z) const;
    // Dense reassembly B'^T W' B' + X (test use).
    Eigen::MatrixXd reassemble(int dim) const;
};

// Builds the split from the current system (base edges plus diagonal bumps).
SddDecomposition sdd_decompose(const GroundedSystem& sys);

}  // namespace polarmin
