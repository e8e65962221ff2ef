#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polarmin/graph.hpp"
#include "polarmin/selection.hpp"

namespace polarmin {

// Everything a command needs, mirroring the command-line flags.
struct RunSpec {
    std::string input;                // edge-list path
    int q = 0;                        // leaders sampled per repetition...
    std::vector<long long> leaders;   // ...unless given explicitly (orig ids)
    int k = 1;
    std::string alg = "exact";  // exact|approx|random|topdegree|topcent|bruteforce|all
    double eps = 0.2;
    std::uint64_t seed = 1;
    int reps = 1;
    std::string out_dir = ".";
    int workers = 0;
    int dense_cap = 30000;
    bool strict_delta = false;
    bool fix_q = false;
    bool topcent_grounded = false;  // alternate centrality reading
    long long brute_cap = 1000000;
};

// Algorithms selected by `alg` ("all" = exact, approx, random, topdegree,
// topcent).  Throws ValidationError for unknown names.
std::vector<std::string> algorithms_for(const std::string& alg);

// Selection experiment over `reps` repetitions.  Writes trajectory.csv,
// summary.csv, chosen_edges.csv and id_map.txt into out_dir.  All output
// except the wall_ms column is byte-stable for a fixed spec regardless of
// worker count.
void cmd_run(const RunSpec& spec);

// Timing protocol on one input graph; appends rows to bench.csv in out_dir
// ("---" for algorithms skipped because of the dense cap).  The candidate
// universe construction time is reported in its own column.
void cmd_bench(const RunSpec& spec);

// Property suites on the bundled corpus (or on --input when given):
// gain identity, curvature, solve contract, dynamics consistency; with
// --strict-delta also the sketched-gain concentration suite.
// Returns 0 when every suite passes, 1 otherwise.
int cmd_validate(const RunSpec& spec);

// Fixed-format helpers shared by writers and tests.
std::string format_value(double v);   // %.12g
std::string format_ms(double v);      // %.3f

}  // namespace polarmin
