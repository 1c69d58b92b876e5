#pragma once

#include <Eigen/Core>

#include "cbeam/errors.hpp"

namespace cbeam {

using Eigen::Index;

/// Real tridiagonal matrix with either Toeplitz (one value per band) or
/// per-entry band storage.
class TridiagMatrix {
public:
    /// diag_n(lower, diag, upper) with constant bands.
    static TridiagMatrix toeplitz(Index n, double lower, double diag, double upper);

    /// Per-entry bands; lower/upper have length n-1, diag length n.
    static TridiagMatrix general(Eigen::VectorXd lower, Eigen::VectorXd diag,
                                 Eigen::VectorXd upper);

    Index size() const { return diag_.size(); }
    bool is_toeplitz() const { return toeplitz_; }

    double lower(Index i) const { return lower_(i); }  // entry (i+1, i)
    double diag(Index i) const { return diag_(i); }
    double upper(Index i) const { return upper_(i); }  // entry (i, i+1)

    Eigen::VectorXd apply(const Eigen::Ref<const Eigen::VectorXd>& x) const;
    Eigen::MatrixXd to_dense() const;
    double infinity_norm() const;
    bool is_symmetric() const;

private:
    TridiagMatrix(Eigen::VectorXd lower, Eigen::VectorXd diag, Eigen::VectorXd upper,
                  bool toeplitz)
        : lower_(std::move(lower)), diag_(std::move(diag)), upper_(std::move(upper)),
          toeplitz_(toeplitz) {}

    Eigen::VectorXd lower_, diag_, upper_;  // lengths n-1, n, n-1
    bool toeplitz_;
};

/// Thomas algorithm with a fallback to the pivoted band solver when a pivot
/// underflows. Throws SingularMatrixError when a pivot magnitude drops below
/// 1e-14 * ||M||_inf.
Eigen::VectorXd tridiag_solve(const TridiagMatrix& M,
                              const Eigen::Ref<const Eigen::VectorXd>& rhs);

/// True iff ||AB - BA||_inf <= 1e-13 * ||A||_inf * ||B||_inf.
/// Throws std::invalid_argument on dimension mismatch.
bool commutes(const TridiagMatrix& A, const TridiagMatrix& B);

}  // namespace cbeam
