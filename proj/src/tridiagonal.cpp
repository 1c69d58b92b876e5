#include "cbeam/tridiagonal.hpp"

#include <cmath>
#include <stdexcept>

#include "cbeam/banded.hpp"

namespace cbeam {

TridiagMatrix TridiagMatrix::toeplitz(Index n, double lower, double diag, double upper) {
    if (n < 1) throw std::invalid_argument("TridiagMatrix: n must be >= 1");
    return TridiagMatrix(Eigen::VectorXd::Constant(n > 1 ? n - 1 : 0, lower),
                         Eigen::VectorXd::Constant(n, diag),
                         Eigen::VectorXd::Constant(n > 1 ? n - 1 : 0, upper), true);
}

TridiagMatrix TridiagMatrix::general(Eigen::VectorXd lower, Eigen::VectorXd diag,
                                     Eigen::VectorXd upper) {
    const Index n = diag.size();
    if (n < 1) throw std::invalid_argument("TridiagMatrix: n must be >= 1");
    if (lower.size() != n - 1 || upper.size() != n - 1)
        throw std::invalid_argument("TridiagMatrix: band lengths must be n-1");
    return TridiagMatrix(std::move(lower), std::move(diag), std::move(upper), false);
}

Eigen::VectorXd TridiagMatrix::apply(const Eigen::Ref<const Eigen::VectorXd>& x) const {
    const Index n = size();
    if (x.size() != n) throw std::invalid_argument("TridiagMatrix::apply: size mismatch");
    Eigen::VectorXd y(n);
    for (Index i = 0; i < n; ++i) {
        double v = diag_(i) * x(i);
        if (i > 0) v += lower_(i - 1) * x(i - 1);
        if (i + 1 < n) v += upper_(i) * x(i + 1);
        y(i) = v;
    }
    return y;
}

Eigen::MatrixXd TridiagMatrix::to_dense() const {
    const Index n = size();
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
        M(i, i) = diag_(i);
        if (i + 1 < n) {
            M(i + 1, i) = lower_(i);
            M(i, i + 1) = upper_(i);
        }
    }
    return M;
}

double TridiagMatrix::infinity_norm() const {
    const Index n = size();
    double norm = 0.0;
    for (Index i = 0; i < n; ++i) {
        double row = std::abs(diag_(i));
        if (i > 0) row += std::abs(lower_(i - 1));
        if (i + 1 < n) row += std::abs(upper_(i));
        norm = std::max(norm, row);
    }
    return norm;
}

bool TridiagMatrix::is_symmetric() const {
    return size() == 1 || (lower_ - upper_).cwiseAbs().maxCoeff() == 0.0;
}

Eigen::VectorXd tridiag_solve(const TridiagMatrix& M,
                              const Eigen::Ref<const Eigen::VectorXd>& rhs) {
    const Index n = M.size();
    if (rhs.size() != n) throw std::invalid_argument("tridiag_solve: size mismatch");
    const double tol = 1e-14 * M.infinity_norm();

    // Thomas elimination; bail out to the pivoted band solver on a small pivot.
    Eigen::VectorXd c(n), x(n);
    bool ok = true;
    double beta = M.diag(0);
    if (std::abs(beta) <= tol) ok = false;
    if (ok) {
        c(0) = (n > 1) ? M.upper(0) / beta : 0.0;
        x(0) = rhs(0) / beta;
        for (Index i = 1; i < n && ok; ++i) {
            beta = M.diag(i) - M.lower(i - 1) * c(i - 1);
            if (std::abs(beta) <= tol) {
                ok = false;
                break;
            }
            c(i) = (i + 1 < n) ? M.upper(i) / beta : 0.0;
            x(i) = (rhs(i) - M.lower(i - 1) * x(i - 1)) / beta;
        }
    }
    if (ok) {
        for (Index i = n - 2; i >= 0; --i) x(i) -= c(i) * x(i + 1);
        return x;
    }

    BandedMatrix band(n, 1, 1);
    for (Index i = 0; i < n; ++i) {
        band.at(i, i) = M.diag(i);
        if (i + 1 < n) {
            band.at(i + 1, i) = M.lower(i);
            band.at(i, i + 1) = M.upper(i);
        }
    }
    return BandedFactorization(band).solve(rhs);
}

bool commutes(const TridiagMatrix& A, const TridiagMatrix& B) {
    if (A.size() != B.size()) throw std::invalid_argument("commutes: dimension mismatch");
    const Eigen::MatrixXd Ad = A.to_dense(), Bd = B.to_dense();
    const Eigen::MatrixXd C = Ad * Bd - Bd * Ad;
    const double norm = C.cwiseAbs().rowwise().sum().maxCoeff();
    return norm <= 1e-13 * A.infinity_norm() * B.infinity_norm();
}

}  // namespace cbeam
