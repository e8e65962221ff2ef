#pragma once

#include <string>
#include <vector>

#include "polarmin/leaders.hpp"

namespace polarmin {

// Output of any edge-selection algorithm.  trajectory[i] is the group
// effective resistance after the first i additions (so index 0 is the value
// of the unmodified system, and the vector has chosen.size() + 1 entries).
// For sketch-driven algorithms the trajectory holds the sketched estimate and
// `estimated` is set.
struct SelectionResult {
    std::string algorithm;
    std::vector<CandidateEdge> chosen;
    std::vector<double> trajectory;
    std::vector<double> round_wall_ms;  // aligned with trajectory
    bool estimated = false;

    double final_value() const { return trajectory.back(); }
};

}  // namespace polarmin
