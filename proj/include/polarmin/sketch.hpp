#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>

#include "polarmin/rng.hpp"

namespace polarmin {

enum class ProbeSpace { node, edge, diagonal };

// Random-projection row with entries +-1/sqrt(p); p rows of this kind sketch
// squared Euclidean norms to within a (1 +- eps) factor.
struct SketchProbe {
    ProbeSpace space;
    int index = 0;   // which of the p rows this is
    int p = 0;       // total number of rows in the sketch
    Eigen::VectorXd row;
};

// Number of projection rows needed for the norm-preservation guarantee at
// accuracy eps on an n-vertex instance: ceil(24 ln n / eps^2).
inline int probe_count(int n, double eps) {
    return static_cast<int>(std::ceil(24.0 * std::log(static_cast<double>(n)) /
                                      (eps * eps)));
}

// The probe is a pure function of (seed, space, round, index): any worker may
// regenerate it and obtain the same entries.
SketchProbe make_probe(ProbeSpace space, int dim, int index, int p,
                       std::uint64_t seed, std::uint64_t round = 0);

}  // namespace polarmin
