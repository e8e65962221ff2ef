// polarmin: pick new leader-follower edges that minimize the polarization of
// noise-driven consensus dynamics (group effective resistance of the grounded
// Laplacian).  Subcommands: run, bench, validate.
#include <cstdio>
#include <exception>

#include "CLI11.hpp"
#include "polarmin/cli.hpp"
#include "polarmin/errors.hpp"

namespace {

void add_common(CLI::App* cmd, polarmin::RunSpec& spec, bool need_input) {
    auto* in = cmd->add_option("--input", spec.input,
                               "edge list file: `u v [w]` per line");
    if (need_input) in->required();
    cmd->add_option("--q", spec.q, "number of leaders sampled per repetition");
    cmd->add_option("--leaders", spec.leaders,
                    "explicit leader vertex ids (input-file ids)");
    cmd->add_option("--k", spec.k, "number of edges to add");
    cmd->add_option("--alg", spec.alg,
                    "exact|approx|random|topdegree|topcent|bruteforce|all");
    cmd->add_option("--eps", spec.eps, "sketch accuracy in (0, 1/4]");
    cmd->add_option("--seed", spec.seed, "master seed");
    cmd->add_option("--reps", spec.reps, "independent repetitions");
    cmd->add_option("--out", spec.out_dir, "output directory");
    cmd->add_option("--workers", spec.workers,
                    "worker threads (0: all hardware threads)");
    cmd->add_option("--dense-cap", spec.dense_cap,
                    "largest system solved by dense factorization");
    cmd->add_flag("--strict-delta", spec.strict_delta,
                  "derive solver accuracies from the worst-case bounds");
    cmd->add_flag("--fix-Q", spec.fix_q,
                  "sample the leader set once and reuse it across repetitions");
    cmd->add_flag("--topcent-grounded", spec.topcent_grounded,
                  "topcent scores followers by the leader-grounded inverse "
                  "diagonal instead of whole-graph resistance centrality");
    cmd->add_option("--brute-cap", spec.brute_cap,
                    "largest subset count bruteforce will enumerate");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge additions minimizing polarization of leader-follower "
                 "consensus dynamics"};
    app.require_subcommand(1);

    polarmin::RunSpec run_spec;
    auto* run = app.add_subcommand(
        "run", "select edges and write trajectory/summary/chosen-edge CSVs");
    add_common(run, run_spec, /*need_input=*/true);

    polarmin::RunSpec bench_spec;
    bench_spec.q = 10;
    bench_spec.k = 20;
    auto* bench = app.add_subcommand(
        "bench", "time the selection algorithms on one input graph");
    add_common(bench, bench_spec, /*need_input=*/true);

    polarmin::RunSpec validate_spec;
    validate_spec.eps = 0.25;
    auto* validate = app.add_subcommand(
        "validate",
        "run the property suites (gain identity, curvature, solve contract, "
        "dynamics; with --strict-delta also sketch concentration)");
    add_common(validate, validate_spec, /*need_input=*/false);

    try {
        app.parse(argc, argv);
        if (run->parsed()) {
            polarmin::cmd_run(run_spec);
            return 0;
        }
        if (bench->parsed()) {
            polarmin::cmd_bench(bench_spec);
            return 0;
        }
        return polarmin::cmd_validate(validate_spec);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const polarmin::ConvergenceError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const polarmin::NumericalError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const polarmin::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const polarmin::CapacityError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const polarmin::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
