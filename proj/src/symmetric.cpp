#include "ccnr/symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace ccnr {

double binomial(Index n, Index k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double c = 1.0;
    // Partial products are themselves binomials, so the division is exact
    // while the value fits in 53 bits.
    for (Index i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
    return c;
}

bool majorizes(const RealVector& y, const RealVector& x) {
    if (y.size() != x.size())
        throw LengthMismatch("majorizes: lengths " + std::to_string(y.size()) + " vs " +
                             std::to_string(x.size()));
    constexpr double kTol = 1e-12;

    RealVector ys = y;
    RealVector xs = x;
    std::sort(ys.begin(), ys.end(), std::greater<double>());
    std::sort(xs.begin(), xs.end(), std::greater<double>());

    double px = 0.0;
    double py = 0.0;
    for (Index k = 0; k < xs.size(); ++k) {
        px += xs(k);
        py += ys(k);
        if (px > py + kTol) return false;
    }
    return std::abs(px - py) <= kTol;
}

RealVector SpikeFlat::expand() const {
    RealVector v = RealVector::Constant(count, flat);
    v(0) = spike;
    return v;
}

double spike_esf(const SpikeFlat& v, Index order) {
    if (order < 1 || order > v.count)
        throw BadOrder("spike_esf: order " + std::to_string(order) + " out of range [1, " +
                       std::to_string(v.count) + "]");
    const Index tail = v.count - 1;
    return binomial(tail, order) * std::pow(v.flat, static_cast<double>(order)) +
           v.spike * binomial(tail, order - 1) * std::pow(v.flat, static_cast<double>(order - 1));
}

}  // namespace ccnr
