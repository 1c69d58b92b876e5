// Shared independent oracles for the test suites: a hand-written dense
// Gaussian elimination solver, finite-difference derivative stencils and
// log-log slope fitting. These deliberately avoid the library's own solver
// paths so they can act as references.
#pragma once

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

// Dense Gaussian elimination with partial pivoting.
inline Eigen::VectorXd dense_ge_solve(Eigen::MatrixXd A, Eigen::VectorXd b) {
    const Eigen::Index n = A.rows();
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index p = k;
        for (Eigen::Index i = k + 1; i < n; ++i)
            if (std::abs(A(i, k)) > std::abs(A(p, k))) p = i;
        if (p != k) {
            A.row(p).swap(A.row(k));
            std::swap(b(p), b(k));
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            const double m = A(i, k) / A(k, k);
            A.row(i).tail(n - k) -= m * A.row(k).tail(n - k);
            b(i) -= m * b(k);
        }
    }
    Eigen::VectorXd x(n);
    for (Eigen::Index i = n - 1; i >= 0; --i) {
        double s = b(i);
        for (Eigen::Index j = i + 1; j < n; ++j) s -= A(i, j) * x(j);
        x(i) = s / A(i, i);
    }
    return x;
}

// Second-order central first derivative.
template <class F>
double fd_first(F f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Fourth derivative by the 5-point stencil, Richardson-extrapolated once.
template <class F>
double fd_fourth_richardson(F f, double x, double h) {
    auto d4 = [&](double hh) {
        return (f(x - 2 * hh) - 4 * f(x - hh) + 6 * f(x) - 4 * f(x + hh) + f(x + 2 * hh))
               / (hh * hh * hh * hh);
    };
    return (4.0 * d4(h / 2) - d4(h)) / 3.0;
}

// Least-squares slope of log(y) against log(x).
inline double slope_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(xs[i]), ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// Random diagonally dominant tridiagonal bands (lower, diag, upper).
inline void random_dd_tridiag(std::mt19937_64& rng, Eigen::Index n, Eigen::VectorXd& lower,
                              Eigen::VectorXd& diag, Eigen::VectorXd& upper) {
    std::uniform_real_distribution<double> off(-1.0, 1.0);
    std::uniform_real_distribution<double> bump(0.1, 2.0);
    lower.resize(n - 1);
    upper.resize(n - 1);
    diag.resize(n);
    for (Eigen::Index i = 0; i < n - 1; ++i) {
        lower(i) = off(rng);
        upper(i) = off(rng);
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        double row = (i > 0 ? std::abs(lower(i - 1)) : 0.0)
                     + (i + 1 < n ? std::abs(upper(i)) : 0.0);
        const double sign = off(rng) >= 0 ? 1.0 : -1.0;
        diag(i) = sign * (row + bump(rng));
    }
}

}  // namespace oracle
