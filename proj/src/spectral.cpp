#include "ccnr/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ccnr/errors.hpp"

namespace ccnr {

namespace {

// Sum of |h_pq|^2 over p != q.
double off_diagonal_mass(const Matrix& h) {
    double mass = 0.0;
    for (Index q = 0; q < h.cols(); ++q)
        for (Index p = 0; p < h.rows(); ++p)
            if (p != q) mass += std::norm(h(p, q));
    return mass;
}

}  // namespace

namespace detail {

RealVector jacobi_eigenvalues(Matrix h) {
    const Index n = h.rows();
    if (n == 1) return RealVector::Constant(1, h(0, 0).real());

    const double total2 = h.squaredNorm();
    // Off-diagonal Frobenius norm below 1e-14 of the matrix norm; the last
    // sweep before hitting this is quadratically convergent, so the diagonal
    // is accurate to machine precision in practice.
    const double stop2 = 1e-28 * total2;
    constexpr int kMaxSweeps = 64;

    double prev_off2 = -1.0;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        const double off2 = off_diagonal_mass(h);
        if (off2 <= stop2) break;
        if (prev_off2 >= 0.0 && off2 >= prev_off2) break;  // rounding floor
        prev_off2 = off2;

        for (Index p = 0; p < n - 1; ++p) {
            for (Index q = p + 1; q < n; ++q) {
                const Complex hpq = h(p, q);
                const double mag = std::abs(hpq);
                if (mag == 0.0) continue;

                // Phase-absorbed 2x2 rotation: with hpq = mag * e^{i psi},
                // U restricted to (p,q) is [[e^{i psi} c, e^{i psi} s],
                // [-s, c]] and H <- U^H H U zeroes the (p,q) pair.
                const Complex phase = hpq / mag;
                const double tau = (h(q, q).real() - h(p, p).real()) / (2.0 * mag);
                double t = 1.0 / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                if (tau < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                h(p, p) -= t * mag;
                h(q, q) += t * mag;
                h(p, q) = 0.0;
                h(q, p) = 0.0;

                for (Index k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const Complex hkp = h(k, p);
                    const Complex hkq = h(k, q);
                    h(k, p) = c * phase * hkp - s * hkq;
                    h(k, q) = s * phase * hkp + c * hkq;
                    h(p, k) = std::conj(h(k, p));
                    h(q, k) = std::conj(h(k, q));
                }
            }
        }
    }

    RealVector eig = h.diagonal().real();
    std::sort(eig.begin(), eig.end(), std::greater<double>());
    return eig;
}

}  // namespace detail

RealVector hermitian_eigenvalues(const Matrix& h) {
    if (h.rows() != h.cols())
        throw NotSquare("hermitian_eigenvalues: matrix is " + std::to_string(h.rows()) +
                        "x" + std::to_string(h.cols()));
    if (h.size() == 0) throw NotSquare("hermitian_eigenvalues: empty matrix");

    const double scale = h.cwiseAbs().maxCoeff();
    const double tol = 1e-12 * scale;
    const double defect = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (defect > tol)
        throw NotHermitian("hermitian_eigenvalues: symmetry defect " + std::to_string(defect) +
                           " exceeds tolerance " + std::to_string(tol));

    return detail::jacobi_eigenvalues(h);
}

RealVector singular_values(const Matrix& a) {
    if (a.size() == 0) throw BadDims("singular_values: empty matrix");

    // Gram matrix on the smaller side; its eigenvalues are the squared
    // singular values. Hermitize to strip rounding residue from the product.
    Matrix gram;
    if (a.rows() <= a.cols())
        gram = a * a.adjoint();
    else
        gram = a.adjoint() * a;
    gram = 0.5 * (gram + gram.adjoint()).eval();

    RealVector eig = detail::jacobi_eigenvalues(std::move(gram));

    // Forming the Gram product leaves rounding residue of order
    // eps * lambda_max in every eigenvalue, so squared singular values below
    // that level are indistinguishable from zero here. Report them as exact
    // zeros: the alternative is sqrt-amplified noise (~1e-8 * ||a||) polluting
    // trace norms of rank-deficient inputs.
    const double noise_floor = 1e-12 * std::max(eig(0), 0.0);
    RealVector s(eig.size());
    for (Index i = 0; i < eig.size(); ++i)
        s(i) = eig(i) > noise_floor ? std::sqrt(eig(i)) : 0.0;
    return s;
}

double trace_norm(const Matrix& a) {
    return singular_values(a).sum();
}

}  // namespace ccnr
