#include "cbeam/eigenvalues.hpp"

#include <cmath>
#include <limits>

namespace cbeam {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

// Parlett-Reinsch balancing: diagonal similarity scaling by powers of the
// radix until row and column norms are roughly equal.
void balance(MatrixXd& a) {
    const Index n = a.rows();
    const double radix = 2.0, sqrdx = radix * radix;
    bool done = false;
    while (!done) {
        done = true;
        for (Index i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (Index j = 0; j < n; ++j)
                if (j != i) {
                    c += std::abs(a(j, i));
                    r += std::abs(a(i, j));
                }
            if (c != 0.0 && r != 0.0) {
                double g = r / radix, f = 1.0;
                const double s = c + r;
                while (c < g) {
                    f *= radix;
                    c *= sqrdx;
                }
                g = r * radix;
                while (c > g) {
                    f /= radix;
                    c /= sqrdx;
                }
                if ((c + r) / f < 0.95 * s) {
                    done = false;
                    a.row(i) *= 1.0 / f;
                    a.col(i) *= f;
                }
            }
        }
    }
}

// Householder reduction to upper Hessenberg form (similarity transform).
void hessenberg(MatrixXd& a) {
    const Index n = a.rows();
    for (Index k = 0; k + 2 < n; ++k) {
        const Index m = n - k - 1;  // rows k+1 .. n-1
        const double xnorm = a.col(k).segment(k + 1, m).norm();
        if (xnorm == 0.0) continue;
        VectorXd v = a.col(k).segment(k + 1, m);
        v(0) += std::copysign(xnorm, v(0));
        const double vn2 = v.squaredNorm();
        if (vn2 == 0.0) continue;
        const double beta = 2.0 / vn2;
        Eigen::RowVectorXd w = v.transpose() * a.block(k + 1, 0, m, n);
        a.block(k + 1, 0, m, n).noalias() -= beta * v * w;
        VectorXd u = a.block(0, k + 1, n, m) * v;
        a.block(0, k + 1, n, m).noalias() -= beta * u * v.transpose();
    }
    for (Index j = 0; j + 2 < n; ++j) a.col(j).segment(j + 2, n - j - 2).setZero();
}

// Implicit double-shift QR iteration on an upper Hessenberg matrix;
// eigenvalues only. Returns false when the sweep budget runs out.
bool francis_qr(MatrixXd& h, Eigen::VectorXcd& eig, int& sweeps, int max_sweeps) {
    const Index n = h.rows();
    const double eps = std::numeric_limits<double>::epsilon();
    double anorm = 0.0;
    for (Index i = 0; i < n; ++i)
        for (Index j = std::max<Index>(i - 1, 0); j < n; ++j) anorm += std::abs(h(i, j));

    Index nn = n - 1;
    double shift_total = 0.0;
    while (nn >= 0) {
        int its = 0;
        for (;;) {
            // look for a negligible subdiagonal element
            Index l = nn;
            for (; l >= 1; --l) {
                double s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
                if (s == 0.0) s = anorm;
                if (std::abs(h(l, l - 1)) <= eps * s) {
                    h(l, l - 1) = 0.0;
                    break;
                }
            }
            double x = h(nn, nn);
            if (l == nn) {  // one real eigenvalue isolated
                eig(nn) = std::complex<double>(x + shift_total, 0.0);
                --nn;
                break;
            }
            double y = h(nn - 1, nn - 1);
            double w = h(nn, nn - 1) * h(nn - 1, nn);
            if (l == nn - 1) {  // 2x2 block isolated
                const double p = 0.5 * (y - x);
                const double q = p * p + w;
                double z = std::sqrt(std::abs(q));
                x += shift_total;
                if (q >= 0.0) {
                    z = p + std::copysign(z, p);
                    eig(nn - 1) = eig(nn) = std::complex<double>(x + z, 0.0);
                    if (z != 0.0) eig(nn) = std::complex<double>(x - w / z, 0.0);
                } else {
                    eig(nn - 1) = std::complex<double>(x + p, z);
                    eig(nn) = std::conj(eig(nn - 1));
                }
                nn -= 2;
                break;
            }
            if (sweeps >= max_sweeps) {
                // report what is left from the working diagonal, flag failure
                for (Index i = 0; i <= nn; ++i)
                    eig(i) = std::complex<double>(h(i, i) + shift_total, 0.0);
                return false;
            }
            if (its == 10 || its == 20) {  // exceptional shift
                shift_total += x;
                for (Index i = 0; i <= nn; ++i) h(i, i) -= x;
                const double s = std::abs(h(nn, nn - 1)) + std::abs(h(nn - 1, nn - 2));
                y = x = 0.75 * s;
                w = -0.4375 * s * s;
            }
            ++its;
            ++sweeps;
            double p = 0.0, q = 0.0, r = 0.0;
            Index m = nn - 2;
            for (; m >= l; --m) {  // two consecutive small subdiagonals
                const double z = h(m, m);
                const double rr = x - z, ss = y - z;
                p = (rr * ss - w) / h(m + 1, m) + h(m, m + 1);
                q = h(m + 1, m + 1) - z - rr - ss;
                r = h(m + 2, m + 1);
                const double s = std::abs(p) + std::abs(q) + std::abs(r);
                p /= s;
                q /= s;
                r /= s;
                if (m == l) break;
                const double u = std::abs(h(m, m - 1)) * (std::abs(q) + std::abs(r));
                const double v =
                    std::abs(p) * (std::abs(h(m - 1, m - 1)) + std::abs(z) + std::abs(h(m + 1, m + 1)));
                if (u <= eps * v) break;
            }
            for (Index i = m + 2; i <= nn; ++i) {
                h(i, i - 2) = 0.0;
                if (i != m + 2) h(i, i - 3) = 0.0;
            }
            for (Index k = m; k <= nn - 1; ++k) {  // double QR step on rows l..nn
                if (k != m) {
                    p = h(k, k - 1);
                    q = h(k + 1, k - 1);
                    r = (k != nn - 1) ? h(k + 2, k - 1) : 0.0;
                    x = std::abs(p) + std::abs(q) + std::abs(r);
                    if (x != 0.0) {
                        p /= x;
                        q /= x;
                        r /= x;
                    }
                }
                const double s = std::copysign(std::sqrt(p * p + q * q + r * r), p);
                if (s == 0.0) continue;
                if (k == m) {
                    if (l != m) h(k, k - 1) = -h(k, k - 1);
                } else {
                    h(k, k - 1) = -s * x;
                }
                p += s;
                x = p / s;
                const double yy = q / s, zz = r / s;
                q /= p;
                r /= p;
                for (Index j = k; j <= nn; ++j) {  // row modification
                    double pp = h(k, j) + q * h(k + 1, j);
                    if (k != nn - 1) {
                        pp += r * h(k + 2, j);
                        h(k + 2, j) -= pp * zz;
                    }
                    h(k + 1, j) -= pp * yy;
                    h(k, j) -= pp * x;
                }
                const Index mmin = std::min(nn, k + 3);
                for (Index i = l; i <= mmin; ++i) {  // column modification
                    double pp = x * h(i, k) + yy * h(i, k + 1);
                    if (k != nn - 1) {
                        pp += zz * h(i, k + 2);
                        h(i, k + 2) -= pp * r;
                    }
                    h(i, k + 1) -= pp * q;
                    h(i, k) -= pp;
                }
            }
        }
    }
    return true;
}

}  // namespace

Spectrum eigenvalues(MatrixXd M) {
    if (M.rows() != M.cols() || M.rows() < 1)
        throw std::invalid_argument("eigenvalues: matrix must be square and non-empty");
    const Index n = M.rows();
    Spectrum s;
    s.eigenvalues.resize(n);
    if (n == 1) {
        s.eigenvalues(0) = std::complex<double>(M(0, 0), 0.0);
        return s;
    }
    balance(M);
    hessenberg(M);
    int sweeps = 0;
    s.converged = francis_qr(M, s.eigenvalues, sweeps, 30 * static_cast<int>(n));
    s.iterations = sweeps;
    return s;
}

double spectral_radius(const Spectrum& s) {
    double r = 0.0;
    for (Index i = 0; i < s.eigenvalues.size(); ++i)
        r = std::max(r, std::abs(s.eigenvalues(i)));
    return r;
}

}  // namespace cbeam
