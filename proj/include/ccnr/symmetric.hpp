#pragma once

#include <string>

#include "ccnr/errors.hpp"
#include "ccnr/types.hpp"

namespace ccnr {

// Binomial coefficient in double precision; exact whenever the value fits in
// 53 bits (true for every size this library touches).
double binomial(Index n, Index k);

// All elementary symmetric functions e_0, ..., e_N of the entries of v,
// via the recurrence e_l^(k) = e_l^(k-1) + v_k * e_{l-1}^(k-1). Entries must
// be nonnegative, which makes the recurrence cancellation-free.
//
// Works for any scalar with +, * and ordering (doubles in production, exact
// rationals in test oracles).
template <typename Derived>
Eigen::Vector<typename Derived::Scalar, Eigen::Dynamic> esf_all(
    const Eigen::DenseBase<Derived>& v) {
    using Scalar = typename Derived::Scalar;
    const Index n = v.size();
    for (Index i = 0; i < n; ++i)
        if (v(i) < Scalar(0))
            throw NegativeEntry("esf: entry " + std::to_string(i) + " is negative");

    Eigen::Vector<Scalar, Eigen::Dynamic> e = Eigen::Vector<Scalar, Eigen::Dynamic>::Zero(n + 1);
    e(0) = Scalar(1);
    for (Index k = 0; k < n; ++k)
        for (Index l = k + 1; l >= 1; --l) e(l) = e(l) + v(k) * e(l - 1);
    return e;
}

// The l-th elementary symmetric function, 1 <= l <= size.
template <typename Derived>
typename Derived::Scalar esf(const Eigen::DenseBase<Derived>& v, Index order) {
    if (order < 1 || order > v.size())
        throw BadOrder("esf: order " + std::to_string(order) + " out of range [1, " +
                       std::to_string(v.size()) + "]");
    return esf_all(v)(order);
}

// True iff x is majorized by y (x ≺ y): every prefix sum of descending-sorted
// x is at most the corresponding prefix sum of y, and the totals agree.
// Both comparisons use an absolute tolerance of 1e-12. Inputs need not be
// sorted. Throws LengthMismatch.
bool majorizes(const RealVector& y, const RealVector& x);

// The vector (spike, flat, ..., flat) with count-1 copies of flat.
struct SpikeFlat {
    double spike = 0.0;
    double flat = 0.0;
    Index count = 1;

    RealVector expand() const;
};

// Closed form of esf on a spike-flat vector:
//   C(N-1, l) * flat^l + spike * C(N-1, l-1) * flat^(l-1).
double spike_esf(const SpikeFlat& v, Index order);

}  // namespace ccnr
