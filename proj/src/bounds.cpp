#include "ccnr/bounds.hpp"

#include <cmath>
#include <string>

#include "ccnr/errors.hpp"
#include "ccnr/symmetric.hpp"

namespace ccnr {

namespace {

void check_dims(int m, int n, const char* where) {
    if (m < 2 || n < m)
        throw BadDims(std::string(where) + ": need 2 <= m <= n, got (" + std::to_string(m) +
                      ", " + std::to_string(n) + ")");
}

void check_order(int ell, int max, const char* where) {
    if (ell < 1 || ell > max)
        throw BadOrder(std::string(where) + ": order " + std::to_string(ell) +
                       " out of range [1, " + std::to_string(max) + "]");
}

}  // namespace

std::pair<double, double> alpha_beta(int m, int n) {
    check_dims(m, n, "alpha_beta");
    const double alpha = 1.0 / std::sqrt(static_cast<double>(m) * static_cast<double>(n));
    const double beta = (1.0 - alpha) / (static_cast<double>(m) * m - 1.0);
    return {alpha, beta};
}

double universal_cap(int m, int ell) {
    if (m < 2) throw BadDims("universal_cap: need m >= 2, got " + std::to_string(m));
    const Index msq = static_cast<Index>(m) * m;
    check_order(ell, static_cast<int>(msq), "universal_cap");
    return binomial(msq, ell) * std::pow(1.0 / static_cast<double>(msq), ell);
}

BoundResult b_tilde(int m, int n, int ell) {
    check_dims(m, n, "b_tilde");
    check_order(ell, m * m, "b_tilde");

    const long long mcubed = static_cast<long long>(m) * m * m;
    BoundResult out;
    if (2LL * n <= 2LL * mcubed - m)
        out.regime = BoundRegime::SpikeFlat;
    else if (n >= mcubed)
        out.regime = BoundRegime::Flat;
    else
        out.regime = BoundRegime::UnknownGap;

    if (out.regime == BoundRegime::Flat) {
        out.alpha = out.beta = 1.0 / (static_cast<double>(m) * m);
    } else {
        std::tie(out.alpha, out.beta) = alpha_beta(m, n);
    }

    if (ell == 1) {
        // Sum of the spectrum is capped at exactly 1 in every regime.
        out.value = 1.0;
        out.ell_one_convention = true;
        return out;
    }

    switch (out.regime) {
        case BoundRegime::SpikeFlat:
            out.value = spike_esf({out.alpha, out.beta, static_cast<Index>(m) * m}, ell);
            break;
        case BoundRegime::Flat:
            out.value = universal_cap(m, ell);
            break;
        case BoundRegime::UnknownGap:
            break;  // exact value open
    }
    return out;
}

double b_sep(int n, int ell) {
    if (n < 2) throw BadDims("b_sep: need n >= 2, got " + std::to_string(n));
    check_order(ell, n * n, "b_sep");
    const double alpha = 1.0 / n;
    const double beta =
        (n - 1.0) / (static_cast<double>(n) * (static_cast<double>(n) * n - 1.0));
    return spike_esf({alpha, beta, static_cast<Index>(n) * n}, ell);
}

FeasibilityReport construction_feasible(int m, int n) {
    check_dims(m, n, "construction_feasible");

    FeasibilityReport rep;
    rep.q = n / m;
    rep.r = n - m * rep.q;
    const auto [alpha, beta] = alpha_beta(m, n);
    const double sqrt_q = std::sqrt(static_cast<double>(rep.q));
    rep.s2 = alpha * alpha - beta / (m * sqrt_q);
    rep.f_qr = static_cast<double>(n) / sqrt_q -
               std::sqrt(static_cast<double>(n) / (static_cast<double>(m) * rep.q));
    rep.threshold = static_cast<double>(m) * m - 1.0;
    rep.feasible = rep.s2 >= -1e-15;
    return rep;
}

}  // namespace ccnr
