#pragma once

#include <Eigen/Core>

#include "cbeam/errors.hpp"

namespace cbeam {

using Eigen::Index;

/// Square banded matrix in packed column storage. Entry (i, j) exists when
/// -ku <= i - j <= kl; everything outside the band is structurally zero.
class BandedMatrix {
public:
    BandedMatrix(Index n, Index kl, Index ku);

    Index size() const { return n_; }
    Index lower_bandwidth() const { return kl_; }
    Index upper_bandwidth() const { return ku_; }

    double operator()(Index i, Index j) const;

    /// In-band write access; (i, j) must lie inside the band.
    double& at(Index i, Index j);

    Eigen::VectorXd apply(const Eigen::Ref<const Eigen::VectorXd>& x) const;
    Eigen::MatrixXd to_dense() const;
    double infinity_norm() const;

private:
    friend class BandedFactorization;
    Index n_, kl_, ku_;
    Eigen::MatrixXd storage_;  // (kl + ku + 1) x n, entry (i,j) at row ku + i - j
};

/// LU factorization with partial pivoting in band storage; reusable for many
/// right-hand sides. Fill-in stays within kl + ku superdiagonals.
class BandedFactorization {
public:
    explicit BandedFactorization(const BandedMatrix& M);

    Index size() const { return n_; }

    Eigen::VectorXd solve(const Eigen::Ref<const Eigen::VectorXd>& rhs) const;
    void solve_in_place(Eigen::VectorXd& x) const;

private:
    Index n_, kl_, ku_;
    Eigen::MatrixXd lu_;  // (2*kl + ku + 1) x n working storage
    Eigen::VectorXi pivot_;
};

inline BandedFactorization banded_factor(const BandedMatrix& M) {
    return BandedFactorization(M);
}

}  // namespace cbeam
