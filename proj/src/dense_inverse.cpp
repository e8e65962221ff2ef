#include "polarmin/dense_inverse.hpp"

#include <Eigen/Cholesky>

#include "polarmin/errors.hpp"

namespace polarmin {

DenseInverse dense_inverse(const Eigen::MatrixXd& mat, int cap, bool verify) {
    const int d = static_cast<int>(mat.rows());
    if (d > cap)
        throw CapacityError("dense inverse of dimension " + std::to_string(d) +
                            " exceeds cap " + std::to_string(cap));
    Eigen::LLT<Eigen::MatrixXd> llt(mat);
    if (llt.info() != Eigen::Success)
        throw NumericalError("grounded Laplacian is not positive definite");
    DenseInverse out;
    out.inv = llt.solve(Eigen::MatrixXd::Identity(d, d));
    out.inv = ((out.inv + out.inv.transpose()) * 0.5).eval();
    if (verify) {
        double res = inverse_residual(mat, out);
        if (!(res <= 1e-8))
            throw NumericalError("inverse residual " + std::to_string(res) +
                                 " above 1e-8");
    }
    return out;
}

DenseInverse dense_inverse(const GroundedSystem& sys, int cap, bool verify) {
    if (sys.dim() > cap)
        throw CapacityError("dense inverse of dimension " +
                            std::to_string(sys.dim()) + " exceeds cap " +
                            std::to_string(cap));
    return dense_inverse(dense_grounded(sys), cap, verify);
}

void sherman_morrison_update(DenseInverse& invm, int u, double w) {
    const int d = invm.dim();
    if (u < 0 || u >= d) throw ValidationError("update row out of range");
    if (!(w > 0.0)) throw ValidationError("update weight must be positive");
    const double denom = 1.0 + w * invm.inv(u, u);
    Eigen::VectorXd col = invm.inv.col(u);
    invm.inv.noalias() -= (w / denom) * col * col.transpose();
    invm.inv = ((invm.inv + invm.inv.transpose()) * 0.5).eval();
}

double inverse_residual(const Eigen::MatrixXd& a, const DenseInverse& invm) {
    const int d = invm.dim();
    return (a * invm.inv - Eigen::MatrixXd::Identity(d, d))
        .cwiseAbs()
        .maxCoeff();
}

}  // namespace polarmin
