#include "polarmin/grounded.hpp"

#include <algorithm>
#include <unordered_set>

#include "polarmin/errors.hpp"
#include "polarmin/rng.hpp"

namespace polarmin {

LeaderConfig make_leader_config(const Graph& g, std::vector<int> leaders) {
    if (leaders.empty()) throw ValidationError("leader set is empty");
    std::sort(leaders.begin(), leaders.end());
    if (std::adjacent_find(leaders.begin(), leaders.end()) != leaders.end())
        throw ValidationError("duplicate vertex in leader set");
    if (leaders.front() < 0 || leaders.back() >= g.n)
        throw ValidationError("leader id out of range");
    if (static_cast<int>(leaders.size()) >= g.n)
        throw ValidationError("leader set must leave at least one follower");

    LeaderConfig cfg;
    cfg.leaders = std::move(leaders);
    cfg.follower_row.assign(g.n, -1);
    for (int v : cfg.leaders) cfg.follower_row[v] = -2;  // mark
    cfg.followers.reserve(g.n - cfg.leaders.size());
    for (int v = 0; v < g.n; ++v) {
        if (cfg.follower_row[v] == -2) {
            cfg.follower_row[v] = -1;
            continue;
        }
        cfg.follower_row[v] = static_cast<int>(cfg.followers.size());
        cfg.followers.push_back(v);
    }
    return cfg;
}

std::vector<CandidateEdge> candidate_universe(const Graph& g,
                                              const LeaderConfig& cfg,
                                              double w) {
    if (!(w > 0.0)) throw ValidationError("candidate weight must be positive");
    std::vector<char> is_nb(g.n, 0);
    std::vector<CandidateEdge> out;
    for (int u : cfg.followers) {
        for (auto [nb, _] : g.adjacency[u]) is_nb[nb] = 1;
        for (int v : cfg.leaders)
            if (!is_nb[v]) out.push_back({v, u, w});
        for (auto [nb, _] : g.adjacency[u]) is_nb[nb] = 0;
    }
    // followers ascend already; leaders ascend within each follower
    return out;
}

std::vector<int> sample_leaders(const Graph& g, int q, std::uint64_t seed,
                                std::uint64_t repetition) {
    if (q <= 0 || q >= g.n)
        throw ValidationError("leader count must be in [1, n-1]");
    std::mt19937_64 rng = substream_rng(seed, Stream::leaders, repetition);
    // Partial Fisher-Yates over the vertex ids.
    std::vector<int> pool(g.n);
    for (int i = 0; i < g.n; ++i) pool[i] = i;
    for (int i = 0; i < q; ++i) {
        auto j = i + static_cast<int>(bounded(rng, g.n - i));
        std::swap(pool[i], pool[j]);
    }
    std::vector<int> Q(pool.begin(), pool.begin() + q);
    std::sort(Q.begin(), Q.end());
    return Q;
}

GroundedSystem grounded_laplacian(const Graph& g, const LeaderConfig& cfg) {
    if (!is_connected(g))
        throw ValidationError(
            "graph is disconnected; grounded Laplacian would be singular");
    const int d = cfg.follower_count();
    GroundedSystem sys;
    sys.g = &g;
    sys.cfg = &cfg;
    sys.diag_bump = Eigen::VectorXd::Zero(d);

    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(4 * g.edges.size());
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(d);
    for (const Edge& e : g.edges) {
        int ru = cfg.follower_row[e.u];
        int rv = cfg.follower_row[e.v];
        if (ru >= 0) diag[ru] += e.w;
        if (rv >= 0) diag[rv] += e.w;
        if (ru >= 0 && rv >= 0) {
            trip.emplace_back(ru, rv, -e.w);
            trip.emplace_back(rv, ru, -e.w);
        }
    }
    for (int i = 0; i < d; ++i) trip.emplace_back(i, i, diag[i]);
    sys.matrix.resize(d, d);
    sys.matrix.setFromTriplets(trip.begin(), trip.end());
    sys.matrix.makeCompressed();
    return sys;
}

void add_candidate(GroundedSystem& sys, const CandidateEdge& e) {
    const LeaderConfig& cfg = *sys.cfg;
    if (!(e.w > 0.0)) throw ValidationError("candidate weight must be positive");
    if (e.leader < 0 || e.leader >= sys.g->n || !cfg.is_leader(e.leader))
        throw ValidationError("candidate endpoint " + std::to_string(e.leader) +
                              " is not a leader");
    int row = (e.follower >= 0 && e.follower < sys.g->n)
                  ? cfg.follower_row[e.follower]
                  : -1;
    if (row < 0)
        throw ValidationError("candidate endpoint " + std::to_string(e.follower) +
                              " is not a follower");
    for (const CandidateEdge& prev : sys.added)
        if (prev == e)
            throw ValidationError("candidate edge added twice");
    // Grounding removes the leader column, so the new edge only shows up as
    // extra weighted degree on the follower's diagonal.
    sys.matrix.coeffRef(row, row) += e.w;
    sys.diag_bump[row] += e.w;
    sys.added.push_back(e);
}

double GroundedSystem::w_min_current() const {
    double w = g->w_min;
    for (const CandidateEdge& e : added) w = std::min(w, e.w);
    return w;
}

double GroundedSystem::w_max_current() const {
    double w = g->w_max;
    for (const CandidateEdge& e : added) w = std::max(w, e.w);
    return w;
}

Eigen::MatrixXd dense_grounded(const GroundedSystem& sys) {
    return Eigen::MatrixXd(sys.matrix);
}

}  // namespace polarmin
