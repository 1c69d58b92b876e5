#pragma once

#include <complex>

#include <Eigen/Core>

namespace cbeam {

/// Computed eigenvalues of a real square matrix. Non-real eigenvalues of a
/// real matrix occur in conjugate pairs.
struct Spectrum {
    Eigen::VectorXcd eigenvalues;
    int iterations = 0;   // QR double-shift sweeps performed
    bool converged = true;
};

/// Eigenvalues of a real dense matrix via balancing, Householder Hessenberg
/// reduction and the implicit double-shift QR iteration. converged is false
/// when the iteration budget (30 n sweeps) is exhausted; the unresolved part
/// of the spectrum is then reported from the working diagonal.
Spectrum eigenvalues(Eigen::MatrixXd M);

/// max |lambda| over the spectrum.
double spectral_radius(const Spectrum& s);

}  // namespace cbeam
