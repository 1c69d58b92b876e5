#include "cbeam/banded.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cbeam {

BandedMatrix::BandedMatrix(Index n, Index kl, Index ku) : n_(n), kl_(kl), ku_(ku) {
    if (n < 1 || kl < 0 || ku < 0)
        throw std::invalid_argument("BandedMatrix: bad dimensions");
    storage_ = Eigen::MatrixXd::Zero(kl + ku + 1, n);
}

double BandedMatrix::operator()(Index i, Index j) const {
    const Index d = i - j;
    if (d > kl_ || -d > ku_) return 0.0;
    return storage_(ku_ + d, j);
}

double& BandedMatrix::at(Index i, Index j) {
    const Index d = i - j;
    if (i < 0 || i >= n_ || j < 0 || j >= n_ || d > kl_ || -d > ku_)
        throw std::out_of_range("BandedMatrix::at: outside band");
    return storage_(ku_ + d, j);
}

Eigen::VectorXd BandedMatrix::apply(const Eigen::Ref<const Eigen::VectorXd>& x) const {
    if (x.size() != n_) throw std::invalid_argument("BandedMatrix::apply: size mismatch");
    Eigen::VectorXd y = Eigen::VectorXd::Zero(n_);
    for (Index j = 0; j < n_; ++j) {
        const Index ilo = std::max<Index>(0, j - ku_);
        const Index ihi = std::min<Index>(n_ - 1, j + kl_);
        const double xj = x(j);
        for (Index i = ilo; i <= ihi; ++i) y(i) += storage_(ku_ + i - j, j) * xj;
    }
    return y;
}

Eigen::MatrixXd BandedMatrix::to_dense() const {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n_, n_);
    for (Index j = 0; j < n_; ++j) {
        const Index ilo = std::max<Index>(0, j - ku_);
        const Index ihi = std::min<Index>(n_ - 1, j + kl_);
        for (Index i = ilo; i <= ihi; ++i) M(i, j) = storage_(ku_ + i - j, j);
    }
    return M;
}

double BandedMatrix::infinity_norm() const {
    Eigen::VectorXd row_sums = Eigen::VectorXd::Zero(n_);
    for (Index j = 0; j < n_; ++j) {
        const Index ilo = std::max<Index>(0, j - ku_);
        const Index ihi = std::min<Index>(n_ - 1, j + kl_);
        for (Index i = ilo; i <= ihi; ++i) row_sums(i) += std::abs(storage_(ku_ + i - j, j));
    }
    return row_sums.size() ? row_sums.maxCoeff() : 0.0;
}

BandedFactorization::BandedFactorization(const BandedMatrix& M)
    : n_(M.size()), kl_(M.lower_bandwidth()), ku_(M.upper_bandwidth()) {
    const Index kv = kl_ + ku_;  // upper bandwidth after pivoting fill-in
    lu_ = Eigen::MatrixXd::Zero(2 * kl_ + ku_ + 1, n_);
    pivot_.resize(n_);

    // entry (i, j) lives at lu_(kv + i - j, j); top kl_ rows are fill space
    for (Index j = 0; j < n_; ++j) {
        const Index ilo = std::max<Index>(0, j - ku_);
        const Index ihi = std::min<Index>(n_ - 1, j + kl_);
        for (Index i = ilo; i <= ihi; ++i) lu_(kv + i - j, j) = M(i, j);
    }

    const double tol = 1e-14 * M.infinity_norm();
    Index ju = 0;  // last column touched by the current elimination step
    for (Index j = 0; j < n_; ++j) {
        const Index km = std::min(kl_, n_ - 1 - j);  // subdiagonal rows in column j
        Index jp = 0;
        double pmax = std::abs(lu_(kv, j));
        for (Index i = 1; i <= km; ++i) {
            const double v = std::abs(lu_(kv + i, j));
            if (v > pmax) {
                pmax = v;
                jp = i;
            }
        }
        if (pmax <= tol)
            throw SingularMatrixError("banded LU: pivot below tolerance in column "
                                      + std::to_string(j));
        pivot_(j) = static_cast<int>(j + jp);
        ju = std::max(ju, std::min(j + kv, n_ - 1));
        if (jp != 0)
            for (Index col = j; col <= ju; ++col)
                std::swap(lu_(kv + j - col, col), lu_(kv + j + jp - col, col));
        if (km > 0) {
            const double piv = lu_(kv, j);
            for (Index i = 1; i <= km; ++i) lu_(kv + i, j) /= piv;
            for (Index col = j + 1; col <= ju; ++col) {
                const double ujc = lu_(kv + j - col, col);
                if (ujc != 0.0)
                    for (Index i = 1; i <= km; ++i)
                        lu_(kv + j + i - col, col) -= lu_(kv + i, j) * ujc;
            }
        }
    }
}

void BandedFactorization::solve_in_place(Eigen::VectorXd& x) const {
    if (x.size() != n_) throw std::invalid_argument("BandedFactorization: size mismatch");
    const Index kv = kl_ + ku_;
    for (Index j = 0; j < n_; ++j) {
        const Index p = pivot_(j);
        if (p != j) std::swap(x(j), x(p));
        const Index km = std::min(kl_, n_ - 1 - j);
        for (Index i = 1; i <= km; ++i) x(j + i) -= lu_(kv + i, j) * x(j);
    }
    for (Index j = n_ - 1; j >= 0; --j) {
        x(j) /= lu_(kv, j);
        const Index ilo = std::max<Index>(0, j - kv);
        for (Index i = ilo; i < j; ++i) x(i) -= lu_(kv + i - j, j) * x(j);
    }
}

Eigen::VectorXd BandedFactorization::solve(const Eigen::Ref<const Eigen::VectorXd>& rhs) const {
    Eigen::VectorXd x = rhs;
    solve_in_place(x);
    return x;
}

}  // namespace cbeam
