#include "polarmin/greedy_approx.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "polarmin/errors.hpp"

namespace polarmin {

void validate(const ApproxParams& params) {
    if (!(params.eps > 0.0) || params.eps > 0.25)
        throw ValidationError("eps must lie in (0, 1/4]");
}

DeltaPair solve_deltas(double n, double m, double w_min, double w_max,
                       double eps, bool strict) {
    if (!strict) return {eps / 6.0, eps / 6.0};
    // Worst-case accuracies; far below what double precision can certify on
    // large instances, hence the 1e-12 clamp and the practical default.
    double d1 = eps * std::sqrt(1.0 - eps) * w_min / (6.0 * n * n * n * w_max);
    double d2 = std::sqrt(eps * w_min * w_min / (16.0 * std::pow(n, 5) * m * m) *
                          std::sqrt((2.0 - 2.0 * eps) / w_max));
    return {std::max(d1, 1e-12), std::max(d2, 1e-12)};
}

DeltaPair solve_deltas(const GroundedSystem& sys, const ApproxParams& params) {
    double m = static_cast<double>(sys.g->m + sys.added.size());
    return solve_deltas(sys.g->n, m, sys.w_min_current(), sys.w_max_current(),
                        params.eps, params.strict_delta);
}

namespace {

constexpr int kProbesPerBatch = 4;   // fixed: accumulation grouping must not
constexpr int kBatchesPerWindow = 32;  // depend on worker count

struct SketchPlan {
    const GroundedSystem* sys;
    SddDecomposition dec;
    int p = 0;
    int dim = 0;
    DeltaPair deltas;
    Eigen::VectorXd sqrt_x;
    std::uint64_t seed = 0;
    std::uint64_t round = 0;
    bool need_t = true;  // false: trace-only (skip node-space solves)
    int cols_per_probe() const { return need_t ? 3 : 2; }
};

SketchPlan make_plan(const GroundedSystem& sys, const ApproxParams& params,
                     std::uint64_t round, bool need_t) {
    validate(params);
    SketchPlan plan;
    plan.sys = &sys;
    plan.dec = sdd_decompose(sys);
    plan.p = probe_count(sys.g->n, params.eps);
    plan.dim = sys.dim();
    plan.deltas = solve_deltas(sys, params);
    plan.sqrt_x = plan.dec.x_diag.cwiseSqrt();
    plan.seed = params.seed;
    plan.round = round;
    plan.need_t = need_t;
    return plan;
}

// Right-hand sides for probe i, in the fixed column order
// [node, edge, diagonal] (node column dropped in trace-only mode).
void fill_probe_rhs(const SketchPlan& plan, int i, RowBlock& rhs, int col0,
                    Eigen::VectorXd& deltas) {
    int c = col0;
    if (plan.need_t) {
        SketchProbe node = make_probe(ProbeSpace::node, plan.dim, i, plan.p,
                                      plan.seed, plan.round);
        rhs.col(c) = node.row;
        deltas[c] = plan.deltas.d1;
        ++c;
    }
    SketchProbe edge = make_probe(ProbeSpace::edge, plan.dec.edge_count(), i,
                                  plan.p, plan.seed, plan.round);
    rhs.col(c) = plan.dec.incidence_weighted_transpose(edge.row);
    deltas[c] = plan.deltas.d2;
    ++c;
    SketchProbe diag = make_probe(ProbeSpace::diagonal, plan.dim, i, plan.p,
                                  plan.seed, plan.round);
    rhs.col(c) = plan.sqrt_x.cwiseProduct(diag.row);
    deltas[c] = plan.deltas.d2;
}

struct BatchPartial {
    Eigen::VectorXd t;  // empty in trace-only mode
    Eigen::VectorXd r;
};

// Solves the probes [first, last) of plan and folds them, ascending, into a
// partial accumulator.  When `store` is non-null the solved vectors are kept
// (columns 3*first.. of the materialized blocks).
BatchPartial run_batch(const SketchPlan& plan, SolveHandle& handle, int first,
                       int last, RowBlock* store) {
    const int cpp = plan.cols_per_probe();
    const int cols = (last - first) * cpp;
    RowBlock rhs(plan.dim, cols);
    Eigen::VectorXd deltas(cols);
    for (int i = first; i < last; ++i)
        fill_probe_rhs(plan, i, rhs, (i - first) * cpp, deltas);
    RowBlock z = handle.solve_block(rhs, deltas);
    if (store)
        store->block(0, first * cpp, plan.dim, cols) = z;

    BatchPartial part;
    part.r = Eigen::VectorXd::Zero(plan.dim);
    if (plan.need_t) part.t = Eigen::VectorXd::Zero(plan.dim);
    for (int i = first; i < last; ++i) {
        const int c = (i - first) * cpp;
        if (plan.need_t) {
            auto z1 = z.col(c);
            for (int u = 0; u < plan.dim; ++u) part.t[u] += z1[u] * z1[u];
        }
        auto z2 = z.col(c + cpp - 2);
        auto z3 = z.col(c + cpp - 1);
        for (int u = 0; u < plan.dim; ++u)
            part.r[u] += z2[u] * z2[u] + z3[u] * z3[u];
    }
    return part;
}

// Shared driver: batches of kProbesPerBatch probes, solved (possibly in
// parallel) within fixed windows, folded into the accumulators in ascending
// batch order.  The grouping is a compile-time constant, so results are
// independent of the worker count and of whether blocks were materialized.
void accumulate_probes(const SketchPlan& plan, const ApproxParams& params,
                       Eigen::VectorXd& t_hat, Eigen::VectorXd& r_hat,
                       RowBlock* store) {
    t_hat = Eigen::VectorXd::Zero(plan.need_t ? plan.dim : 0);
    r_hat = Eigen::VectorXd::Zero(plan.dim);
    const int nbatches = (plan.p + kProbesPerBatch - 1) / kProbesPerBatch;
#ifdef _OPENMP
    const int workers = params.workers > 0 ? params.workers
                                           : omp_get_max_threads();
#else
    const int workers = 1;
    (void)params;
#endif

    std::vector<BatchPartial> window(
        std::min(nbatches, kBatchesPerWindow));
    // One handle per worker (SolveHandle pins references, so via unique_ptr).
    std::vector<std::unique_ptr<SolveHandle>> handles;
    SolveOptions sopts;
    sopts.rule = params.strict_delta ? StopRule::energy_norm
                                     : StopRule::relative_residual;
    for (int t = 0; t < workers; ++t)
        handles.push_back(std::make_unique<SolveHandle>(*plan.sys, sopts));

    for (int w0 = 0; w0 < nbatches; w0 += kBatchesPerWindow) {
        const int wn = std::min(kBatchesPerWindow, nbatches - w0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers)
#endif
        for (int b = 0; b < wn; ++b) {
#ifdef _OPENMP
            SolveHandle& handle = *handles[omp_get_thread_num()];
#else
            SolveHandle& handle = *handles[0];
#endif
            const int first = (w0 + b) * kProbesPerBatch;
            const int last = std::min(plan.p, first + kProbesPerBatch);
            window[b] = run_batch(plan, handle, first, last, store);
        }
        for (int b = 0; b < wn; ++b) {
            if (plan.need_t) t_hat += window[b].t;
            r_hat += window[b].r;
        }
    }
}

SketchGains finish_gains(const GroundedSystem& sys, const SketchPlan& plan,
                         Eigen::VectorXd t_hat, Eigen::VectorXd r_hat) {
    SketchGains out;
    out.t_hat = std::move(t_hat);
    out.r_hat = std::move(r_hat);
    out.probes_done = plan.p;
    out.trace_estimate = out.r_hat.sum();
    const LeaderConfig& cfg = *sys.cfg;
    out.gains.reserve(cfg.candidates.size());
    for (const CandidateEdge& e : cfg.candidates) {
        int row = cfg.follower_row[e.follower];
        GainEstimate ge;
        ge.edge = e;
        ge.t = out.t_hat[row];
        ge.r = out.r_hat[row];
        ge.gain = e.w * ge.t / (1.0 + e.w * ge.r);
        out.gains.push_back(ge);
    }
    return out;
}

}  // namespace

SketchGains gains_est(const GroundedSystem& sys, const ApproxParams& params,
                      std::uint64_t round) {
    SketchPlan plan = make_plan(sys, params, round, true);
    // Materialized route: all solved probe blocks are held at once.
    RowBlock store(plan.dim, plan.p * plan.cols_per_probe());
    Eigen::VectorXd t_hat, r_hat;
    accumulate_probes(plan, params, t_hat, r_hat, &store);
    return finish_gains(sys, plan, std::move(t_hat), std::move(r_hat));
}

SketchGains f_gains_est(const GroundedSystem& sys, const ApproxParams& params,
                        std::uint64_t round) {
    SketchPlan plan = make_plan(sys, params, round, true);
    Eigen::VectorXd t_hat, r_hat;
    accumulate_probes(plan, params, t_hat, r_hat, nullptr);
    return finish_gains(sys, plan, std::move(t_hat), std::move(r_hat));
}

double sketched_trace(const GroundedSystem& sys, const ApproxParams& params,
                      std::uint64_t round) {
    SketchPlan plan = make_plan(sys, params, round, false);
    Eigen::VectorXd t_hat, r_hat;
    accumulate_probes(plan, params, t_hat, r_hat, nullptr);
    return r_hat.sum();
}

SelectionResult run_approx(const Graph& g, const LeaderConfig& cfg, int k,
                           const ApproxParams& params) {
    validate(params);
    if (k < 0) throw ValidationError("k must be nonnegative");
    if (k > static_cast<int>(cfg.candidates.size()))
        throw ValidationError("k exceeds the number of candidate edges");

    using Clock = std::chrono::steady_clock;
    SelectionResult res;
    res.algorithm = "approx";
    res.estimated = true;

    GroundedSystem sys = grounded_laplacian(g, cfg);
    std::vector<char> used(cfg.candidates.size(), 0);
    for (int round = 0; round < k; ++round) {
        auto start = Clock::now();
        SketchGains sk = f_gains_est(sys, params, round);
        int best = -1;
        for (size_t i = 0; i < cfg.candidates.size(); ++i) {
            if (used[i]) continue;
            if (best < 0 || sk.gains[i].gain > sk.gains[best].gain ||
                (sk.gains[i].gain == sk.gains[best].gain &&
                 cfg.candidates[i] < cfg.candidates[best]))
                best = static_cast<int>(i);
        }
        const CandidateEdge& pick = cfg.candidates[best];
        used[best] = 1;
        res.trajectory.push_back(sk.trace_estimate);
        add_candidate(sys, pick);
        res.chosen.push_back(pick);
        res.round_wall_ms.push_back(
            std::chrono::duration<double, std::milli>(Clock::now() - start)
                .count());
    }
    // Last trajectory point: one trace-only pass over the final system.
    auto start = Clock::now();
    res.trajectory.push_back(sketched_trace(sys, params, k));
    res.round_wall_ms.push_back(
        std::chrono::duration<double, std::milli>(Clock::now() - start)
            .count());
    return res;
}

}  // namespace polarmin
