#include "ccnr/construct.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace ccnr {

DensityMatrix extremal_flat(int m, int n) {
    if (m < 2) throw BadDims("extremal_flat: need m >= 2, got " + std::to_string(m));
    const long long mcubed = static_cast<long long>(m) * m * m;
    if (n < mcubed)
        throw RegimeError("extremal_flat: need n >= m^3 = " + std::to_string(mcubed) +
                          ", got n = " + std::to_string(n));

    const Index msq = static_cast<Index>(m) * m;
    const Index dim = static_cast<Index>(m) * n;
    const double w = 1.0 / static_cast<double>(mcubed);

    // rho = (1/m^3) sum_{k,l} E_kl (x) F_kl, F_kl = (E_kl (x) I_{m^2}) (+) O.
    // F_kl places ones at (k m^2 + t, l m^2 + t), t < m^2.
    Matrix rho = Matrix::Zero(dim, dim);
    for (Index k = 0; k < m; ++k)
        for (Index l = 0; l < m; ++l)
            for (Index t = 0; t < msq; ++t)
                rho(composite_index(k, k * msq + t, n), composite_index(l, l * msq + t, n)) = w;

    return DensityMatrix::make(std::move(rho), {m, n});
}

std::pair<DensityMatrix, ConstructionParams> extremal_spike(int m, int n) {
    const FeasibilityReport feas = construction_feasible(m, n);

    ConstructionParams p;
    p.m = m;
    p.n = n;
    p.q = feas.q;
    p.r = feas.r;
    std::tie(p.alpha, p.beta) = alpha_beta(m, n);
    const double sqrt_q = std::sqrt(static_cast<double>(p.q));
    p.s1 = p.beta / sqrt_q;
    p.s2 = feas.s2;
    p.s3 = p.alpha * p.alpha;

    if (!feas.feasible) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "extremal_spike(" << m << ", " << n << "): s2 = " << feas.s2
            << " < 0 (q = " << feas.q << ", r = " << feas.r << ", f(q,r) = " << feas.f_qr
            << " vs m^2 - 1 = " << feas.threshold << ")";
        throw InfeasibleConstruction(msg.str(), feas);
    }

    const Index dim = static_cast<Index>(m) * n;
    Matrix rho = Matrix::Zero(dim, dim);

    // rho1 = sum_{k,l} E_kl (x) F_kl with F_kl = (E_kl (x) I_q) (+) O_r:
    // ones at (k q + t, l q + t), t < q, inside the fine factor.
    for (Index k = 0; k < m; ++k)
        for (Index l = 0; l < m; ++l)
            for (Index t = 0; t < p.q; ++t)
                rho(composite_index(k, k * p.q + t, n), composite_index(l, l * p.q + t, n)) +=
                    p.s1;

    // rho2 = I_m (x) (I_{mq} (+) O_r), rho3 = I_m (x) (O_{mq} (+) I_r).
    for (Index k = 0; k < m; ++k)
        for (Index j = 0; j < n; ++j)
            rho(composite_index(k, j, n), composite_index(k, j, n)) +=
                j < static_cast<Index>(m) * p.q ? p.s2 : p.s3;

    return {DensityMatrix::make(std::move(rho), {m, n}), p};
}

DensityMatrix separable_witness(int n) {
    if (n < 2) throw BadDims("separable_witness: need n >= 2, got " + std::to_string(n));

    const Index nsq = static_cast<Index>(n) * n;
    const double w = 1.0 / (static_cast<double>(n) * (n + 1));

    RealVector x = RealVector::Zero(nsq);
    for (Index k = 0; k < n; ++k) x(k * (n + 1)) = 1.0;

    Matrix rho = w * (RealMatrix::Identity(nsq, nsq) + x * x.transpose()).cast<Complex>();
    return DensityMatrix::make(std::move(rho), {n, n});
}

std::pair<RealVector, RealVector> lemma21_witness(int m, int n) {
    if (m < 1 || n < 1)
        throw BadDims("lemma21_witness: need m, n >= 1, got (" + std::to_string(m) + ", " +
                      std::to_string(n) + ")");
    RealVector x = RealVector::Zero(static_cast<Index>(m) * m);
    for (Index k = 0; k < m; ++k) x(k * (m + 1)) = 1.0;
    RealVector y = RealVector::Zero(static_cast<Index>(n) * n);
    for (Index k = 0; k < n; ++k) y(k * (n + 1)) = 1.0;
    return {std::move(x), std::move(y)};
}

}  // namespace ccnr
