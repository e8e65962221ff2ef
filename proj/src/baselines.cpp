#include "polarmin/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "polarmin/errors.hpp"
#include "polarmin/rng.hpp"

namespace polarmin {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
}

// Trajectory for a fixed edge sequence: exact traces while the system fits
// the dense cap, sketched trace estimates otherwise.
SelectionResult with_trajectory(const Graph& g, const LeaderConfig& cfg,
                                std::vector<CandidateEdge> edges,
                                const std::string& name,
                                const BaselineOptions& opts) {
    SelectionResult res;
    res.algorithm = name;
    GroundedSystem sys = grounded_laplacian(g, cfg);
    const bool dense = sys.dim() <= opts.dense_cap;
    res.estimated = !dense;

    auto start = Clock::now();
    if (dense) {
        DenseInverse invm = dense_inverse(sys, opts.dense_cap);
        res.trajectory.push_back(invm.trace());
        res.round_wall_ms.push_back(ms_since(start));
        for (const CandidateEdge& e : edges) {
            start = Clock::now();
            add_candidate(sys, e);
            sherman_morrison_update(invm, cfg.follower_row[e.follower], e.w);
            res.trajectory.push_back(invm.trace());
            res.round_wall_ms.push_back(ms_since(start));
        }
    } else {
        res.trajectory.push_back(sketched_trace(sys, opts.sketch, 0));
        res.round_wall_ms.push_back(ms_since(start));
        std::uint64_t round = 1;
        for (const CandidateEdge& e : edges) {
            start = Clock::now();
            add_candidate(sys, e);
            res.trajectory.push_back(sketched_trace(sys, opts.sketch, round++));
            res.round_wall_ms.push_back(ms_since(start));
        }
    }
    res.chosen = std::move(edges);
    return res;
}

void check_budget(const LeaderConfig& cfg, int k) {
    if (k < 0) throw ValidationError("k must be nonnegative");
    if (k > static_cast<int>(cfg.candidates.size()))
        throw ValidationError("k exceeds the number of candidate edges");
}

// Shared link policy of the degree/centrality baselines: walk followers in
// score order, attach each to random leaders among its unused candidates
// until the budget is spent.
std::vector<CandidateEdge> link_by_follower_order(
    const LeaderConfig& cfg, const std::vector<int>& follower_order, int k,
    std::uint64_t seed) {
    std::vector<std::vector<int>> by_follower(cfg.follower_row.size());
    for (size_t i = 0; i < cfg.candidates.size(); ++i)
        by_follower[cfg.candidates[i].follower].push_back(
            static_cast<int>(i));
    std::vector<CandidateEdge> picked;
    picked.reserve(k);
    int remaining = k;
    for (size_t oi = 0; oi < follower_order.size() && remaining > 0; ++oi) {
        std::vector<int> avail = by_follower[follower_order[oi]];
        if (avail.empty()) continue;
        std::mt19937_64 rng =
            substream_rng(seed, Stream::baseline_links, oi);
        int take = std::min<int>(remaining, static_cast<int>(avail.size()));
        for (int t = 0; t < take; ++t) {
            auto j = t + static_cast<int>(bounded(rng, avail.size() - t));
            std::swap(avail[t], avail[j]);
            picked.push_back(cfg.candidates[avail[t]]);
        }
        remaining -= take;
    }
    if (remaining > 0)
        throw ValidationError("candidate set cannot satisfy the edge budget");
    return picked;
}

}  // namespace

double exact_polarization(const GroundedSystem& sys, int cap) {
    return 0.5 * effective_resistance(sys, cap);
}

double exact_polarization(const Graph& g, const LeaderConfig& cfg, int cap) {
    GroundedSystem sys = grounded_laplacian(g, cfg);
    return exact_polarization(sys, cap);
}

SelectionResult run_random(const Graph& g, const LeaderConfig& cfg, int k,
                           BaselineOptions opts) {
    check_budget(cfg, k);
    std::vector<int> idx(cfg.candidates.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::mt19937_64 rng = substream_rng(opts.seed, Stream::baseline_random);
    std::vector<CandidateEdge> edges;
    edges.reserve(k);
    for (int t = 0; t < k; ++t) {
        auto j = t + static_cast<int>(bounded(rng, idx.size() - t));
        std::swap(idx[t], idx[j]);
        edges.push_back(cfg.candidates[idx[t]]);
    }
    return with_trajectory(g, cfg, std::move(edges), "random", opts);
}

SelectionResult run_top_degree(const Graph& g, const LeaderConfig& cfg, int k,
                               BaselineOptions opts) {
    check_budget(cfg, k);
    std::vector<int> order = cfg.followers;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        double da = g.weighted_degree(a), db = g.weighted_degree(b);
        if (da != db) return da > db;
        return a < b;
    });
    auto edges = link_by_follower_order(cfg, order, k, opts.seed);
    return with_trajectory(g, cfg, std::move(edges), "topdegree", opts);
}

SelectionResult run_top_cent(const Graph& g, const LeaderConfig& cfg, int k,
                             BaselineOptions opts, CentralityReading reading) {
    check_budget(cfg, k);
    std::vector<double> score(g.n, 0.0);
    if (reading == CentralityReading::whole_graph) {
        // Tr(L_{v}^{-1}) = Tr(L^+) + n L^+_vv, so the pseudo-inverse diagonal
        // orders vertices; one dense solve covers every follower.
        if (g.n > opts.dense_cap)
            throw CapacityError("centrality scoring needs a dense solve of "
                                "dimension " + std::to_string(g.n));
        Eigen::MatrixXd l = Eigen::MatrixXd::Zero(g.n, g.n);
        for (const Edge& e : g.edges) {
            l(e.u, e.u) += e.w;
            l(e.v, e.v) += e.w;
            l(e.u, e.v) -= e.w;
            l(e.v, e.u) -= e.w;
        }
        const double shift = 1.0 / g.n;
        Eigen::MatrixXd reg =
            l + Eigen::MatrixXd::Constant(g.n, g.n, shift);
        Eigen::LLT<Eigen::MatrixXd> llt(reg);
        if (llt.info() != Eigen::Success)
            throw NumericalError("Laplacian pseudo-inverse solve failed");
        Eigen::MatrixXd pinv =
            llt.solve(Eigen::MatrixXd::Identity(g.n, g.n));
        double tr = pinv.trace() - 1.0;  // remove the constant-vector mode
        for (int v = 0; v < g.n; ++v)
            score[v] = tr + g.n * (pinv(v, v) - shift);
    } else {
        GroundedSystem sys = grounded_laplacian(g, cfg);
        DenseInverse invm = dense_inverse(sys, opts.dense_cap);
        for (int i = 0; i < cfg.follower_count(); ++i)
            score[cfg.followers[i]] = invm.inv(i, i);
    }
    std::vector<int> order = cfg.followers;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (score[a] != score[b]) return score[a] < score[b];
        return a < b;
    });
    auto edges = link_by_follower_order(cfg, order, k, opts.seed);
    return with_trajectory(g, cfg, std::move(edges), "topcent", opts);
}

long long subset_count(long long n, int k) {
    long long c = 1;
    for (int i = 1; i <= k; ++i) {
        if (c > (1LL << 62) / std::max<long long>(n, 1))
            return 1LL << 62;  // saturate
        c = c * (n - k + i) / i;
    }
    return c;
}

SelectionResult run_brute_force(const Graph& g, const LeaderConfig& cfg, int k,
                                BruteForceOptions opts) {
    const int nc = static_cast<int>(cfg.candidates.size());
    if (k < 0) throw ValidationError("k must be nonnegative");
    if (k > nc)
        throw ValidationError("k exceeds the number of candidate edges");
    long long total = subset_count(nc, k);
    if (total > opts.subset_cap)
        throw CapacityError("brute force would enumerate " +
                            std::to_string(total) + " subsets (cap " +
                            std::to_string(opts.subset_cap) + ")");

    GroundedSystem sys = grounded_laplacian(g, cfg);
    DenseInverse base = dense_inverse(sys, opts.dense_cap);

    std::vector<int> comb(k), best_comb;
    std::iota(comb.begin(), comb.end(), 0);
    double best_val = 0.0;
    bool have_best = false;
    DenseInverse work;
    while (true) {
        // rank-1 chain from the base inverse, in subset order
        work.inv = base.inv;
        for (int i : comb) {
            const CandidateEdge& e = cfg.candidates[i];
            sherman_morrison_update(work, cfg.follower_row[e.follower], e.w);
        }
        double val = work.trace();
        // strict <: enumeration is lexicographic, so ties keep the smallest
        if (!have_best || val < best_val) {
            have_best = true;
            best_val = val;
            best_comb = comb;
        }
        // next combination, lexicographic
        int pos = k - 1;
        while (pos >= 0 && comb[pos] == nc - k + pos) --pos;
        if (pos < 0) break;
        ++comb[pos];
        for (int j = pos + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }

    std::vector<CandidateEdge> edges;
    edges.reserve(k);
    for (int i : best_comb) edges.push_back(cfg.candidates[i]);
    BaselineOptions traj_opts;
    traj_opts.dense_cap = opts.dense_cap;
    return with_trajectory(g, cfg, std::move(edges), "bruteforce", traj_opts);
}

}  // namespace polarmin
