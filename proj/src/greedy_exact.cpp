#include "polarmin/greedy_exact.hpp"

#include <chrono>

#include "polarmin/errors.hpp"

namespace polarmin {

double effective_resistance(const GroundedSystem& sys, int cap) {
    return dense_inverse(sys, cap).trace();
}

std::vector<GainEstimate> exact_gains(
    const DenseInverse& invm, const LeaderConfig& cfg,
    const std::vector<CandidateEdge>& candidates) {
    // t(u) = squared norm of column u; shared by every candidate at u.
    Eigen::VectorXd t = invm.inv.colwise().squaredNorm();
    std::vector<GainEstimate> out;
    out.reserve(candidates.size());
    for (const CandidateEdge& e : candidates) {
        int row = cfg.follower_row[e.follower];
        if (row < 0) throw ValidationError("candidate follower is a leader");
        GainEstimate ge;
        ge.edge = e;
        ge.t = t[row];
        ge.r = invm.inv(row, row);
        ge.gain = e.w * ge.t / (1.0 + e.w * ge.r);
        out.push_back(ge);
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
}

}  // namespace

SelectionResult run_exact(const Graph& g, const LeaderConfig& cfg, int k,
                          ExactOptions opts) {
    if (k < 0) throw ValidationError("k must be nonnegative");
    if (k > static_cast<int>(cfg.candidates.size()))
        throw ValidationError("k exceeds the number of candidate edges");

    SelectionResult res;
    res.algorithm = "exact";

    auto start = Clock::now();
    GroundedSystem sys = grounded_laplacian(g, cfg);
    DenseInverse invm = dense_inverse(sys, opts.dense_cap);
    res.trajectory.push_back(invm.trace());
    res.round_wall_ms.push_back(ms_since(start));

    std::vector<char> used(cfg.candidates.size(), 0);
    for (int round = 0; round < k; ++round) {
        start = Clock::now();
        Eigen::VectorXd t = invm.inv.colwise().squaredNorm();
        int best = -1;
        double best_gain = 0.0;
        for (size_t i = 0; i < cfg.candidates.size(); ++i) {
            if (used[i]) continue;
            const CandidateEdge& e = cfg.candidates[i];
            int row = cfg.follower_row[e.follower];
            double gain = e.w * t[row] / (1.0 + e.w * invm.inv(row, row));
            if (best < 0 || gain > best_gain ||
                (gain == best_gain && e < cfg.candidates[best])) {
                best = static_cast<int>(i);
                best_gain = gain;
            }
        }
        const CandidateEdge& pick = cfg.candidates[best];
        used[best] = 1;
        add_candidate(sys, pick);
        sherman_morrison_update(invm, cfg.follower_row[pick.follower], pick.w);
        res.chosen.push_back(pick);
        res.trajectory.push_back(invm.trace());
        res.round_wall_ms.push_back(ms_since(start));
    }
    return res;
}

}  // namespace polarmin
