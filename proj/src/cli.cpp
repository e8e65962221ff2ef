#include "polarmin/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "polarmin/baselines.hpp"
#include "polarmin/checks.hpp"
#include "polarmin/errors.hpp"
#include "polarmin/graphgen.hpp"
#include "polarmin/greedy_approx.hpp"
#include "polarmin/greedy_exact.hpp"
#include "polarmin/grounded.hpp"
#include "polarmin/rng.hpp"

namespace polarmin {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::ofstream open_out(const std::string& dir, const std::string& name,
                       bool append = false) {
    std::filesystem::path p = std::filesystem::path(dir) / name;
    std::ofstream out(p, append ? std::ios::app : std::ios::trunc);
    if (!out) throw ValidationError("cannot open output file " + p.string());
    return out;
}

std::vector<int> resolve_leaders(const Graph& g, const RunSpec& spec,
                                 std::uint64_t repetition) {
    if (!spec.leaders.empty()) {
        std::map<long long, int> by_label;
        for (int i = 0; i < g.n; ++i) by_label[g.labels[i]] = i;
        std::vector<int> out;
        for (long long id : spec.leaders) {
            auto it = by_label.find(id);
            if (it == by_label.end())
                throw ValidationError("leader id " + std::to_string(id) +
                                      " is not a vertex of the working graph");
            out.push_back(it->second);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    if (spec.q <= 0)
        throw ValidationError("need --q >= 1 or an explicit --leaders list");
    return sample_leaders(g, spec.q, spec.seed,
                          spec.fix_q ? 0 : repetition);
}

SelectionResult dispatch(const std::string& name, const Graph& g,
                         const LeaderConfig& cfg, const RunSpec& spec,
                         std::uint64_t rep_seed) {
    ApproxParams ap;
    ap.eps = spec.eps;
    ap.seed = rep_seed;
    ap.strict_delta = spec.strict_delta;
    ap.workers = spec.workers;
    BaselineOptions bo;
    bo.seed = rep_seed;
    bo.dense_cap = spec.dense_cap;
    bo.sketch = ap;

    if (name == "exact") return run_exact(g, cfg, spec.k, {spec.dense_cap});
    if (name == "approx") return run_approx(g, cfg, spec.k, ap);
    if (name == "random") return run_random(g, cfg, spec.k, bo);
    if (name == "topdegree") return run_top_degree(g, cfg, spec.k, bo);
    if (name == "topcent")
        return run_top_cent(g, cfg, spec.k, bo,
                            spec.topcent_grounded
                                ? CentralityReading::leader_grounded
                                : CentralityReading::whole_graph);
    if (name == "bruteforce")
        return run_brute_force(g, cfg, spec.k, {spec.brute_cap, spec.dense_cap});
    throw ValidationError("unknown algorithm: " + name);
}

// Group effective resistance of the system after the chosen additions,
// recomputed from scratch (dense when it fits, otherwise the reported value
// stands).
double final_exact_value(const Graph& g, const LeaderConfig& cfg,
                         const SelectionResult& res, int dense_cap) {
    GroundedSystem sys = grounded_laplacian(g, cfg);
    for (const auto& e : res.chosen) add_candidate(sys, e);
    if (sys.dim() <= dense_cap) return effective_resistance(sys, dense_cap);
    return res.final_value();
}

struct SummaryAccum {
    std::vector<double> finals;
    std::vector<double> exact_finals;
};

void write_summary(std::ofstream& out, const std::string& alg,
                   const SummaryAccum& acc) {
    const auto& v = acc.finals;
    int reps = static_cast<int>(v.size());
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= reps;
    double se = 0.0;
    if (reps > 1) {
        double ss = 0.0;
        for (double x : v) ss += (x - mean) * (x - mean);
        se = std::sqrt(ss / (reps - 1)) / std::sqrt(double(reps));
    }
    double exact_mean = 0.0;
    for (double x : acc.exact_finals) exact_mean += x;
    exact_mean /= reps;
    out << alg << ',' << reps << ',' << format_value(mean) << ','
        << format_value(se) << ',' << format_value(exact_mean) << '\n';
}

const char* kValidateTag = "[validate]";

bool report(const CheckReport& r) {
    std::printf("%s %s: %s (worst=%s)%s%s\n", kValidateTag, r.name.c_str(),
                r.pass ? "PASS" : "FAIL", format_value(r.worst).c_str(),
                r.detail.empty() ? "" : " ", r.detail.c_str());
    std::fflush(stdout);
    return r.pass;
}

}  // namespace

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string format_ms(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::vector<std::string> algorithms_for(const std::string& alg) {
    if (alg == "all")
        return {"exact", "approx", "random", "topdegree", "topcent"};
    static const char* known[] = {"exact",     "approx",  "random",
                                  "topdegree", "topcent", "bruteforce"};
    for (const char* k : known)
        if (alg == k) return {alg};
    throw ValidationError("unknown algorithm: " + alg);
}

void cmd_run(const RunSpec& spec) {
    if (spec.k < 0) throw ValidationError("k must be >= 0");
    if (spec.reps < 1) throw ValidationError("reps must be >= 1");
    Graph raw = load_edge_list(spec.input);
    std::vector<std::pair<long long, int>> mapping;
    Graph g = largest_connected_component(raw, &mapping);

    std::filesystem::create_directories(spec.out_dir);
    {
        auto map_out = open_out(spec.out_dir, "id_map.txt");
        write_id_mapping(mapping, map_out);
    }
    auto traj = open_out(spec.out_dir, "trajectory.csv");
    auto summ = open_out(spec.out_dir, "summary.csv");
    auto chosen = open_out(spec.out_dir, "chosen_edges.csv");
    traj << "repetition,algorithm,k_step,R_Q,wall_ms\n";
    summ << "algorithm,reps,final_r_q_mean,final_r_q_stderr,"
            "final_r_q_exact_mean\n";
    chosen << "repetition,algorithm,step,leader,follower,orig_leader,"
              "orig_follower,weight\n";

    const auto algs = algorithms_for(spec.alg);
    std::map<std::string, SummaryAccum> summary;

    for (int rep = 0; rep < spec.reps; ++rep) {
        LeaderConfig cfg =
            make_leader_config(g, resolve_leaders(g, spec, rep));
        cfg.candidates = candidate_universe(g, cfg, 1.0);
        std::uint64_t rep_seed = substream_seed(spec.seed, Stream::generic, rep);
        for (const auto& name : algs) {
            SelectionResult res = dispatch(name, g, cfg, spec, rep_seed);
            for (std::size_t i = 0; i < res.trajectory.size(); ++i) {
                double ms = i < res.round_wall_ms.size() ? res.round_wall_ms[i]
                                                         : 0.0;
                traj << rep << ',' << name << ',' << i << ','
                     << format_value(res.trajectory[i]) << ','
                     << format_ms(ms) << '\n';
            }
            for (std::size_t s = 0; s < res.chosen.size(); ++s) {
                const auto& e = res.chosen[s];
                chosen << rep << ',' << name << ',' << s + 1 << ','
                       << e.leader << ',' << e.follower << ','
                       << g.labels[e.leader] << ',' << g.labels[e.follower]
                       << ',' << format_value(e.w) << '\n';
            }
            auto& acc = summary[name];
            acc.finals.push_back(res.final_value());
            acc.exact_finals.push_back(
                final_exact_value(g, cfg, res, spec.dense_cap));
        }
    }
    for (const auto& name : algs) write_summary(summ, name, summary[name]);
}

void cmd_bench(const RunSpec& spec) {
    Graph raw = load_edge_list(spec.input);
    Graph g = largest_connected_component(raw);
    std::string network =
        std::filesystem::path(spec.input).filename().string();

    std::filesystem::create_directories(spec.out_dir);
    std::filesystem::path p =
        std::filesystem::path(spec.out_dir) / "bench.csv";
    bool fresh = !std::filesystem::exists(p) ||
                 std::filesystem::file_size(p) == 0;
    auto out = open_out(spec.out_dir, "bench.csv", /*append=*/true);
    if (fresh) out << "network,n,m,algorithm,seconds,setup_seconds\n";

    for (const auto& name : algorithms_for(spec.alg)) {
        auto t0 = Clock::now();
        LeaderConfig cfg = make_leader_config(g, resolve_leaders(g, spec, 0));
        cfg.candidates = candidate_universe(g, cfg, 1.0);
        double setup = seconds_since(t0);

        int dim = g.n - cfg.q();
        // Algorithms that need a dense factorization are skipped above the
        // cap instead of thrashing memory ("---" in the seconds column).
        bool dense_route =
            ((name == "exact" || name == "bruteforce") && dim > spec.dense_cap) ||
            (name == "topcent" &&
             (spec.topcent_grounded ? dim : g.n) > spec.dense_cap);
        if (dense_route) {
            out << network << ',' << g.n << ',' << g.m << ',' << name
                << ",---," << format_value(setup) << '\n';
            continue;
        }
        auto t1 = Clock::now();
        SelectionResult res =
            dispatch(name, g, cfg, spec,
                     substream_seed(spec.seed, Stream::generic, 0));
        double secs = seconds_since(t1);
        out << network << ',' << g.n << ',' << g.m << ',' << name << ','
            << format_value(secs) << ',' << format_value(setup) << '\n';
        (void)res;
    }
}

int cmd_validate(const RunSpec& spec) {
    bool all_pass = true;
    const std::uint64_t seed = spec.seed;

    if (!spec.input.empty()) {
        Graph raw = load_edge_list(spec.input);
        Graph g = largest_connected_component(raw);
        int q = spec.q > 0 ? spec.q : 3;
        LeaderConfig cfg =
            make_leader_config(g, sample_leaders(g, q, seed, 0));
        cfg.candidates = candidate_universe(g, cfg, 1.0);
        all_pass &= report(check_gain_identity(g, cfg));
        all_pass &= report(check_solve_contract(g, cfg, 1e-2, 4, seed));
        all_pass &= report(check_solve_contract(g, cfg, 1e-6, 4, seed));
        SimulationConfig sim;
        sim.seed = seed;
        sim.workers = spec.workers;
        all_pass &= report(check_dynamics(g, cfg, sim));
        if (spec.strict_delta)
            all_pass &= report(
                check_concentration(g, cfg, spec.eps, 10, true));
        all_pass &= report(check_curvature(40, 24, 1e-10, seed));
        return all_pass ? 0 : 1;
    }

    // Default corpus: small generated graphs with mixed weights.
    struct Case {
        std::string name;
        Graph g;
        int q;
    };
    std::vector<Case> cases;
    cases.push_back({"path12", path_graph(12), 1});
    cases.push_back({"grid4x5", grid_graph(4, 5), 2});
    cases.push_back(
        {"sprand40", randomize_weights(sparse_random_graph(40, 4.0, seed),
                                       0.5, 3.0, seed ^ 1),
         3});
    for (auto& c : cases) {
        LeaderConfig cfg =
            make_leader_config(c.g, sample_leaders(c.g, c.q, seed, 0));
        cfg.candidates = candidate_universe(c.g, cfg, 1.0);
        CheckReport r = check_gain_identity(c.g, cfg);
        r.name += " [" + c.name + "]";
        all_pass &= report(r);
    }
    all_pass &= report(check_curvature(60, 24, 1e-10, seed));
    {
        Graph g = grid_graph(5, 8);
        LeaderConfig cfg =
            make_leader_config(g, sample_leaders(g, 3, seed, 0));
        cfg.candidates = candidate_universe(g, cfg, 1.0);
        all_pass &= report(check_solve_contract(g, cfg, 1e-2, 6, seed));
        all_pass &= report(check_solve_contract(g, cfg, 1e-6, 6, seed));
    }
    {
        Graph g = randomize_weights(sparse_random_graph(36, 4.0, seed + 7),
                                    0.5, 2.0, seed + 8);
        LeaderConfig cfg =
            make_leader_config(g, sample_leaders(g, 2, seed, 0));
        cfg.candidates = candidate_universe(g, cfg, 1.0);
        SimulationConfig sim;
        sim.seed = seed;
        sim.workers = spec.workers;
        all_pass &= report(check_dynamics(g, cfg, sim));
        if (spec.strict_delta)
            all_pass &= report(
                check_concentration(g, cfg, spec.eps, 10, true));
    }
    return all_pass ? 0 : 1;
}

}  // namespace polarmin
