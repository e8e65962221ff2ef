#include "polarmin/dynamics.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "polarmin/errors.hpp"
#include "polarmin/rng.hpp"
#include "polarmin/solver.hpp"

namespace polarmin {

double stability_bound(const GroundedSystem& sys) {
    double lambda = largest_eigenvalue(sys.matrix);
    if (!(lambda > 0.0)) throw NumericalError("nonpositive spectral estimate");
    return 2.0 / lambda;
}

PolarizationEstimate simulate(const Graph& g, const LeaderConfig& cfg,
                              const SimulationConfig& sim) {
    GroundedSystem sys = grounded_laplacian(g, cfg);
    return simulate(sys, sim);
}

PolarizationEstimate simulate(const GroundedSystem& sys,
                              const SimulationConfig& sim) {
    const int d = sys.dim();
    const double bound = stability_bound(sys);
    const double dt = sim.dt > 0.0 ? sim.dt : 0.1 * bound;
    if (dt >= bound)
        throw ValidationError("dt " + std::to_string(dt) +
                              " breaches the stability bound " +
                              std::to_string(bound));
    if (sim.paths <= 0 || sim.batches_per_path <= 0)
        throw ValidationError("paths and batches_per_path must be positive");
    if (sim.start.size() != 0 && sim.start.size() != d)
        throw ValidationError("start vector has wrong dimension");

    const long long burn = static_cast<long long>(std::ceil(sim.t_burn / dt));
    long long sample = static_cast<long long>(std::ceil(sim.t_sample / dt));
    const int nb = sim.batches_per_path;
    sample = ((sample + nb - 1) / nb) * nb;  // whole batches
    const long long batch_len = sample / nb;
    const double sigma = sim.noise * std::sqrt(dt);

    std::vector<double> batch_means(static_cast<size_t>(sim.paths) * nb, 0.0);
    std::vector<double> finals(sim.paths, 0.0);

#ifdef _OPENMP
    const int workers = sim.workers > 0 ? sim.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(workers)
#endif
    for (int path = 0; path < sim.paths; ++path) {
        std::mt19937_64 rng = substream_rng(sim.seed, Stream::sim_path, path);
        std::normal_distribution<double> normal(0.0, 1.0);
        Eigen::VectorXd x = sim.start.size() ? sim.start
                                             : Eigen::VectorXd::Zero(d);
        Eigen::VectorXd lx(d);
        const bool dump_this = sim.dump != nullptr && path == 0;
        for (long long step = 0; step < burn + sample; ++step) {
            lx.noalias() = sys.matrix * x;
            if (sigma != 0.0) {
                for (int i = 0; i < d; ++i)
                    x[i] += -dt * lx[i] + sigma * normal(rng);
            } else {
                x -= dt * lx;
            }
            if (step >= burn) {
                const double s2 = x.squaredNorm();
                const long long k = step - burn;
                batch_means[path * nb + static_cast<int>(k / batch_len)] +=
                    s2 / static_cast<double>(batch_len);
                if (k == sample - 1) finals[path] = s2;
                if (dump_this && k % sim.dump_stride == 0) {
                    for (int i = 0; i < d; ++i)
                        *sim.dump << k * dt << ','
                                  << sys.cfg->followers[i] << ',' << x[i]
                                  << '\n';
                }
            }
        }
    }

    PolarizationEstimate est;
    est.dt = dt;
    est.steps_per_path = burn + sample;
    est.batches = sim.paths * nb;
    double mean = 0.0;
    for (double b : batch_means) mean += b;
    mean /= est.batches;
    double var = 0.0;
    for (double b : batch_means) var += (b - mean) * (b - mean);
    var /= std::max(1, est.batches - 1);
    est.value = mean;
    est.stderr_ = std::sqrt(var / est.batches);
    for (double f : finals) est.final_step_mean += f / sim.paths;
    return est;
}

}  // namespace polarmin
