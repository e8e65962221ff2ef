#include "polarmin/checks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "polarmin/baselines.hpp"
#include "polarmin/dense_inverse.hpp"
#include "polarmin/errors.hpp"
#include "polarmin/graphgen.hpp"
#include "polarmin/greedy_exact.hpp"
#include "polarmin/rng.hpp"
#include "polarmin/solver.hpp"

namespace polarmin {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

CheckReport check_gain_identity(const Graph& g, const LeaderConfig& cfg,
                                double rel_tol) {
    CheckReport rep;
    rep.name = "gain-vs-trace identity";
    GroundedSystem sys = grounded_laplacian(g, cfg);
    DenseInverse invm = dense_inverse(sys);
    const double base_trace = invm.trace();
    auto gains = exact_gains(invm, cfg, cfg.candidates);

    rep.pass = true;
    for (const GainEstimate& ge : gains) {
        if (!(ge.t > 0.0 && ge.r > 0.0 && ge.gain > 0.0 &&
              ge.gain < ge.t / ge.r)) {
            rep.pass = false;
            rep.detail = "positivity/upper-bound invariant violated";
            return rep;
        }
        // independent route: rebuild and invert the bumped matrix
        Eigen::MatrixXd bumped = dense_grounded(sys);
        int row = cfg.follower_row[ge.edge.follower];
        bumped(row, row) += ge.edge.w;
        double drop = base_trace - dense_inverse(bumped).trace();
        double rel = std::abs(ge.gain - drop) / std::max(drop, 1e-300);
        rep.worst = std::max(rep.worst, rel);
        if (rel > rel_tol) rep.pass = false;
    }
    rep.detail = "worst relative deviation " + fmt(rep.worst) + " over " +
                 std::to_string(gains.size()) + " candidates";
    return rep;
}

CheckReport check_curvature(int trials, int max_n, double slack,
                            std::uint64_t seed) {
    CheckReport rep;
    rep.name = "monotonicity and supermodularity";
    rep.pass = true;
    double worst_super = 0.0;  // how far gain_T exceeded gain_S
    int done = 0;
    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 rng = substream_rng(seed, Stream::generic, trial);
        int n = 8 + static_cast<int>(bounded(rng, std::max(1, max_n - 7)));
        Graph g = sparse_random_graph(n, 3.0, rng());
        if (bounded(rng, 2)) g = randomize_weights(g, 0.25, 4.0, rng());
        int q = 1 + static_cast<int>(bounded(rng, std::min(4, n - 2)));
        LeaderConfig cfg = make_leader_config(g, sample_leaders(g, q, rng()));
        cfg.candidates = candidate_universe(g, cfg);
        const int nc = static_cast<int>(cfg.candidates.size());
        if (nc < 3) continue;

        // random nested S subset of T, and e outside T
        int t_size = 1 + static_cast<int>(bounded(rng, std::min(5, nc - 1)));
        std::vector<int> idx(nc);
        for (int i = 0; i < nc; ++i) idx[i] = i;
        for (int i = 0; i <= t_size; ++i) {
            auto j = i + static_cast<int>(bounded(rng, nc - i));
            std::swap(idx[i], idx[j]);
        }
        int s_size = static_cast<int>(bounded(rng, t_size + 1));
        const CandidateEdge probe = cfg.candidates[idx[t_size]];

        auto gain_at = [&](int subset_size) {
            GroundedSystem sys = grounded_laplacian(g, cfg);
            DenseInverse invm = dense_inverse(sys);
            double before0 = invm.trace();
            for (int i = 0; i < subset_size; ++i) {
                const CandidateEdge& e = cfg.candidates[idx[i]];
                add_candidate(sys, e);
                sherman_morrison_update(invm, cfg.follower_row[e.follower],
                                        e.w);
                double after = invm.trace();
                if (!(after < before0)) {
                    rep.pass = false;
                    rep.detail = "trace failed to decrease on addition";
                }
                before0 = after;
            }
            int row = cfg.follower_row[probe.follower];
            double t = invm.inv.col(row).squaredNorm();
            double r = invm.inv(row, row);
            return probe.w * t / (1.0 + probe.w * r);
        };
        double gain_s = gain_at(s_size);
        double gain_t = gain_at(t_size);
        if (!(gain_s > 0.0) || !(gain_t > 0.0)) {
            rep.pass = false;
            rep.detail = "nonpositive gain";
        }
        worst_super = std::max(worst_super, gain_t - gain_s);
        if (gain_t - gain_s > slack) rep.pass = false;
        ++done;
    }
    rep.worst = worst_super;
    if (rep.detail.empty())
        rep.detail = "worst supermodularity slack " + fmt(worst_super) +
                     " over " + std::to_string(done) + " trials";
    return rep;
}

CheckReport check_greedy_bound(const Graph& g, const LeaderConfig& cfg, int k,
                               long long subset_cap) {
    CheckReport rep;
    rep.name = "greedy (1-1/e) reduction bound";
    SelectionResult greedy = run_exact(g, cfg, k);
    BruteForceOptions bopts;
    bopts.subset_cap = subset_cap;
    SelectionResult opt = run_brute_force(g, cfg, k, bopts);
    double base = greedy.trajectory.front();
    double red_greedy = base - greedy.final_value();
    double red_opt = base - opt.final_value();
    const double factor = 1.0 - 1.0 / std::exp(1.0);
    rep.pass = red_greedy >= factor * red_opt - 1e-9;
    rep.worst = greedy.final_value() / opt.final_value();
    rep.detail = "reduction " + fmt(red_greedy) + " vs optimal " +
                 fmt(red_opt) + "; final-value ratio " + fmt(rep.worst);
    return rep;
}

CheckReport check_dynamics(const Graph& g, const LeaderConfig& cfg,
                           SimulationConfig sim, double rel_band) {
    CheckReport rep;
    rep.name = "simulated polarization vs half trace";
    double target = exact_polarization(g, cfg);
    PolarizationEstimate est = simulate(g, cfg, sim);
    double err = std::abs(est.value - target);
    double band = std::max(3.0 * est.stderr_, rel_band * target);
    rep.pass = err <= band;
    rep.worst = err / target;
    rep.detail = "sim " + fmt(est.value) + " vs " + fmt(target) +
                 " (stderr " + fmt(est.stderr_) + ", band " + fmt(band) + ")";
    return rep;
}

CheckReport check_concentration(const Graph& g, const LeaderConfig& cfg,
                                double eps, int n_seeds, bool strict_delta,
                                double min_fraction) {
    CheckReport rep;
    rep.name = "sketched-gain concentration";
    GroundedSystem sys = grounded_laplacian(g, cfg);
    DenseInverse invm = dense_inverse(sys);
    auto exact = exact_gains(invm, cfg, cfg.candidates);

    long long ok = 0, all = 0;
    for (int s = 0; s < n_seeds; ++s) {
        ApproxParams params;
        params.eps = eps;
        params.seed = substream_seed(9000 + s, Stream::generic);
        params.strict_delta = strict_delta;
        SketchGains sk = f_gains_est(sys, params);
        for (size_t i = 0; i < exact.size(); ++i) {
            ++all;
            if (is_eps_approx(exact[i].gain, sk.gains[i].gain, 3.0 * eps))
                ++ok;
        }
    }
    double frac = all ? static_cast<double>(ok) / all : 1.0;
    rep.pass = frac >= min_fraction;
    rep.worst = frac;
    rep.detail = fmt(100.0 * frac) + "% of " + std::to_string(all) +
                 " sketched gains within (1 +- " + fmt(3.0 * eps) +
                 ") of exact";
    return rep;
}

CheckReport check_solve_contract(const Graph& g, const LeaderConfig& cfg,
                                 double delta, int n_rhs, std::uint64_t seed) {
    CheckReport rep;
    rep.name = "energy-norm solve contract";
    GroundedSystem sys = grounded_laplacian(g, cfg);
    SolveOptions opts;
    opts.rule = StopRule::energy_norm;
    SolveHandle handle(sys, opts);
    Eigen::MatrixXd dense = dense_grounded(sys);
    Eigen::LLT<Eigen::MatrixXd> llt(dense);

    rep.pass = true;
    std::mt19937_64 rng = substream_rng(seed, Stream::generic, 77);
    for (int t = 0; t < n_rhs; ++t) {
        Eigen::VectorXd b(sys.dim());
        for (int i = 0; i < sys.dim(); ++i)
            b[i] = (rng() >> 63) ? 1.0 : -1.0;
        Eigen::VectorXd x = handle.solve(b, delta);
        Eigen::VectorXd ref = llt.solve(b);
        Eigen::VectorXd diff = x - ref;
        double err = std::sqrt(diff.dot(dense * diff));
        double scale = std::sqrt(ref.dot(dense * ref));
        double rel = err / scale;
        rep.worst = std::max(rep.worst, rel / delta);
        if (!(rel <= delta)) rep.pass = false;
    }
    rep.detail = "worst ||x-x*||_A / (delta ||x*||_A) = " + fmt(rep.worst);
    return rep;
}

}  // namespace polarmin
