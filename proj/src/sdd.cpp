#include "polarmin/sdd.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "polarmin/errors.hpp"

namespace polarmin {

SddDecomposition sdd_decompose(const GroundedSystem& sys) {
    const Graph& g = *sys.g;
    const LeaderConfig& cfg = *sys.cfg;
    SddDecomposition dec;
    dec.x_diag = sys.diag_bump;  // added candidate weight
    for (const Edge& e : g.edges) {
        int ru = cfg.follower_row[e.u];
        int rv = cfg.follower_row[e.v];
        if (ru >= 0 && rv >= 0) {
            // follower-follower edge: one incidence row, +1 at the lower row
            dec.rows.push_back({std::min(ru, rv), std::max(ru, rv), e.w});
        } else if (ru >= 0) {
            dec.x_diag[ru] += e.w;  // leader coupling
        } else if (rv >= 0) {
            dec.x_diag[rv] += e.w;
        }
    }
    std::sort(dec.rows.begin(), dec.rows.end(),
              [](const auto& a, const auto& b) {
                  return std::pair(a.head, a.tail) < std::pair(b.head, b.tail);
              });
    return dec;
}

Eigen::VectorXd SddDecomposition::incidence_weighted_transpose(
    const Eigen::VectorXd& q) const {
    if (q.size() != edge_count())
        throw ValidationError("edge-space vector has wrong dimension");
    Eigen::VectorXd y = Eigen::VectorXd::Zero(x_diag.size());
    for (int i = 0; i < edge_count(); ++i) {
        const double s = std::sqrt(rows[i].w) * q[i];
        y[rows[i].head] += s;
        y[rows[i].tail] -= s;
    }
    return y;
}

Eigen::VectorXd SddDecomposition::incidence_weighted_apply(
    const Eigen::VectorXd& z) const {
    Eigen::VectorXd y(edge_count());
    for (int i = 0; i < edge_count(); ++i)
        y[i] = std::sqrt(rows[i].w) * (z[rows[i].head] - z[rows[i].tail]);
    return y;
}

Eigen::MatrixXd SddDecomposition::reassemble(int dim) const {
    if (x_diag.size() != dim)
        throw ValidationError("decomposition dimension mismatch");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    m.diagonal() = x_diag;
    for (const IncidenceRow& row : rows) {
        m(row.head, row.head) += row.w;
        m(row.tail, row.tail) += row.w;
        m(row.head, row.tail) -= row.w;
        m(row.tail, row.head) -= row.w;
    }
    return m;
}

}  // namespace polarmin
