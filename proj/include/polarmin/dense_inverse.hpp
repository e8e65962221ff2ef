#pragma once

#include <Eigen/Dense>

#include "polarmin/grounded.hpp"

namespace polarmin {

// Explicit inverse of a grounded Laplacian, maintained across diagonal
// updates.  For a connected graph every entry is strictly positive.
struct DenseInverse {
    Eigen::MatrixXd inv;
    int dim() const { return static_cast<int>(inv.rows()); }
    double trace() const { return inv.trace(); }
};

inline constexpr int kDefaultDenseCap = 30000;

// Cholesky-based inverse.  Throws CapacityError when the dimension exceeds
// `cap`, NumericalError if the matrix is not positive definite.  When
// `verify` is set, checks max |L*inv - I| <= 1e-8 (O(d^3); test use).
DenseInverse dense_inverse(const GroundedSystem& sys,
                           int cap = kDefaultDenseCap, bool verify = false);
DenseInverse dense_inverse(const Eigen::MatrixXd& mat,
                           int cap = kDefaultDenseCap, bool verify = false);

// Rank-1 inverse maintenance for a diagonal bump of +w at follower row u:
//   inv <- inv - w * inv.col(u) inv.col(u)^T / (1 + w * inv(u,u)),
// followed by re-symmetrization.  O(d^2).
void sherman_morrison_update(DenseInverse& invm, int u, double w);

// max |A*inv - I| residual, diagnostic.
double inverse_residual(const Eigen::MatrixXd& a, const DenseInverse& invm);

}  // namespace polarmin
