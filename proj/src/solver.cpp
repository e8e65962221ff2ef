#include "polarmin/solver.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "polarmin/errors.hpp"
#include "polarmin/rng.hpp"

namespace polarmin {

namespace {

// Gershgorin row bound: certified upper bound on the largest eigenvalue.
double gershgorin_bound(const SparseMat& a) {
    double best = 0.0;
    const int d = static_cast<int>(a.rows());
    const auto* outer = a.outerIndexPtr();
    const auto* val = a.valuePtr();
    for (int i = 0; i < d; ++i) {
        double row = 0.0;
        for (int k = outer[i]; k < outer[i + 1]; ++k) row += std::abs(val[k]);
        best = std::max(best, row);
    }
    return best;
}

}  // namespace

SolveHandle::SolveHandle(const GroundedSystem& sys, SolveOptions opts)
    : mat_(&sys.matrix), opts_(opts) {
    const int d = sys.dim();
    inv_diag_.resize(d);
    for (int i = 0; i < d; ++i) {
        double diag = sys.matrix.coeff(i, i);
        if (!(diag > 0.0))
            throw NumericalError("grounded Laplacian has nonpositive diagonal");
        inv_diag_[i] = 1.0 / diag;
    }
    const double n = static_cast<double>(sys.g->n);
    lambda_lower_ = sys.w_min_current() / (n * n);
    lambda_upper_ = std::min(n * n * sys.w_max_current(), gershgorin_bound(*mat_));
    max_iter_ = opts.max_iterations > 0 ? opts.max_iterations
                                        : std::min(d + 1000, 10000);
    if (opts_.precond == Precond::incomplete_cholesky) {
        Eigen::SparseMatrix<double> colmajor(sys.matrix);
        ic_.compute(colmajor);
        if (ic_.info() != Eigen::Success)
            throw NumericalError("incomplete Cholesky factorization failed");
    }
}

Eigen::VectorXd SolveHandle::solve(const Eigen::VectorXd& b, double delta) {
    RowBlock rhs(b.size(), 1);
    rhs.col(0) = b;
    Eigen::VectorXd deltas(1);
    deltas[0] = delta;
    RowBlock x = solve_block(rhs, deltas);
    return x.col(0);
}

// Lockstep preconditioned CG over the columns of `rhs`.  Every column runs
// the textbook scalar iteration with its own alpha/beta; a converged column
// freezes (its alpha and beta forced to zero keep x bitwise untouched).
// Batching therefore only shares matrix sweeps; results match per-column
// solves exactly, whatever the batch composition.
RowBlock SolveHandle::solve_block(const RowBlock& rhs,
                                  const Eigen::VectorXd& deltas) {
    const int d = static_cast<int>(rhs.rows());
    const int nb = static_cast<int>(rhs.cols());
    if (deltas.size() != nb)
        throw ValidationError("one delta per right-hand side required");

    const double snorm_factor = std::sqrt(lambda_lower_ / lambda_upper_);
    std::vector<double> thr2(nb);
    for (int c = 0; c < nb; ++c) {
        double delta = deltas[c];
        if (!(delta > 0.0)) throw ValidationError("delta must be positive");
        double thr =
            opts_.rule == StopRule::energy_norm ? delta * snorm_factor : delta;
        thr2[c] = thr * thr;
    }

    RowBlock x = RowBlock::Zero(d, nb);
    RowBlock r = rhs;
    RowBlock z(d, nb), p(d, nb), ap(d, nb);
    std::vector<double> bnorm2(nb, 0.0), rz(nb), rn2(nb, 0.0);
    std::vector<char> active(nb, 1);

    for (int i = 0; i < d; ++i)
        for (int c = 0; c < nb; ++c) bnorm2[c] += r(i, c) * r(i, c);
    int live = 0;
    for (int c = 0; c < nb; ++c) {
        rn2[c] = bnorm2[c];
        if (bnorm2[c] == 0.0 || rn2[c] <= thr2[c] * bnorm2[c])
            active[c] = 0;  // zero rhs or a threshold >= 1: x = 0 already fits
        else
            ++live;
    }

    auto apply_precond = [&](const RowBlock& src, RowBlock& dst) {
        if (opts_.precond == Precond::jacobi) {
            for (int i = 0; i < d; ++i) {
                const double m = inv_diag_[i];
                for (int c = 0; c < nb; ++c) dst(i, c) = m * src(i, c);
            }
        } else {
            Eigen::VectorXd col(d);
            for (int c = 0; c < nb; ++c) {
                col = src.col(c);
                dst.col(c) = ic_.solve(col);
            }
        }
    };

    apply_precond(r, z);
    std::fill(rz.begin(), rz.end(), 0.0);
    for (int i = 0; i < d; ++i)
        for (int c = 0; c < nb; ++c) rz[c] += r(i, c) * z(i, c);
    p = z;

    const auto* outer = mat_->outerIndexPtr();
    const auto* inner = mat_->innerIndexPtr();
    const auto* val = mat_->valuePtr();
    std::vector<double> alpha(nb), beta(nb), pap(nb), rz_next(nb);

    long long iters = 0;
    for (int it = 0; it < max_iter_ && live > 0; ++it) {
        ++iters;
        // ap = A * p, one sweep of the matrix shared by all columns
        const double* pd = p.data();
        double* apd = ap.data();
        for (int i = 0; i < d; ++i) {
            double* out = apd + static_cast<std::ptrdiff_t>(i) * nb;
            std::fill(out, out + nb, 0.0);
            for (int k = outer[i]; k < outer[i + 1]; ++k) {
                const double v = val[k];
                const double* in =
                    pd + static_cast<std::ptrdiff_t>(inner[k]) * nb;
                for (int c = 0; c < nb; ++c) out[c] += v * in[c];
            }
        }
        std::fill(pap.begin(), pap.end(), 0.0);
        for (int i = 0; i < d; ++i)
            for (int c = 0; c < nb; ++c) pap[c] += p(i, c) * ap(i, c);
        for (int c = 0; c < nb; ++c) {
            if (!active[c]) {
                alpha[c] = 0.0;
                continue;
            }
            if (!(pap[c] > 0.0))
                throw NumericalError("matrix not positive definite in CG");
            alpha[c] = rz[c] / pap[c];
        }
        std::fill(rn2.begin(), rn2.end(), 0.0);
        for (int i = 0; i < d; ++i) {
            for (int c = 0; c < nb; ++c) {
                x(i, c) += alpha[c] * p(i, c);
                r(i, c) -= alpha[c] * ap(i, c);
                rn2[c] += r(i, c) * r(i, c);
            }
        }
        for (int c = 0; c < nb; ++c) {
            if (active[c] && rn2[c] <= thr2[c] * bnorm2[c]) {
                active[c] = 0;
                --live;
            }
        }
        if (live == 0) break;
        apply_precond(r, z);
        std::fill(rz_next.begin(), rz_next.end(), 0.0);
        for (int i = 0; i < d; ++i)
            for (int c = 0; c < nb; ++c) rz_next[c] += r(i, c) * z(i, c);
        for (int c = 0; c < nb; ++c)
            beta[c] = active[c] ? rz_next[c] / rz[c] : 0.0;
        rz = rz_next;
        for (int i = 0; i < d; ++i)
            for (int c = 0; c < nb; ++c)
                p(i, c) = z(i, c) + beta[c] * p(i, c);
    }

    stats_.solves += nb;
    stats_.iterations += iters;
    if (live > 0) {
        double worst = 0.0;
        for (int c = 0; c < nb; ++c)
            if (active[c])
                worst = std::max(worst, std::sqrt(rn2[c] / bnorm2[c]));
        throw ConvergenceError("CG did not reach the requested accuracy in " +
                                   std::to_string(max_iter_) + " iterations",
                               worst);
    }
    if (opts_.rule == StopRule::energy_norm)
        stats_.energy_norm_stops += nb;
    else
        stats_.residual_stops += nb;
    return x;
}

Eigen::VectorXd sdd_solve(const GroundedSystem& sys, const Eigen::VectorXd& b,
                          double delta, SolveOptions opts) {
    SolveHandle handle(sys, opts);
    return handle.solve(b, delta);
}

double largest_eigenvalue(const SparseMat& a, std::uint64_t seed) {
    const int d = static_cast<int>(a.rows());
    std::mt19937_64 rng = substream_rng(seed, Stream::power_iter);
    // Continuous start: a +-1 pattern can be exactly orthogonal to the
    // dominant eigenvector on symmetric instances (e.g. a 2-clique system).
    std::uniform_real_distribution<double> unit(0.1, 1.0);
    Eigen::VectorXd v(d);
    for (int i = 0; i < d; ++i)
        v[i] = ((rng() >> 63) ? 1.0 : -1.0) * unit(rng);
    v.normalize();
    double lambda = 0.0;
    for (int it = 0; it < 20000; ++it) {
        Eigen::VectorXd av = a * v;
        double next = v.dot(av);
        double norm = av.norm();
        if (norm == 0.0) return 0.0;
        v = av / norm;
        if (it > 0 && std::abs(next - lambda) <= 1e-8 * std::abs(next)) {
            lambda = next;
            break;
        }
        lambda = next;
    }
    return lambda;
}

}  // namespace polarmin
