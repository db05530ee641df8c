#pragma once

#include <optional>
#include <utility>

#include "ccnr/types.hpp"

namespace ccnr {

// Which formula produced a bound. Regime boundaries are decided by exact
// integer comparison of n against m^3 - m/2 and m^3 (half-integral for odd m,
// hence the doubled comparison inside).
enum class BoundRegime {
    SpikeFlat,   // m <= n <= m^3 - m/2: extremal spectrum (alpha, beta, ..., beta)
    Flat,        // n >= m^3: extremal spectrum (1/m^2, ..., 1/m^2)
    UnknownGap,  // m^3 - m/2 < n < m^3: exact value open
};

struct BoundResult {
    // Absent exactly in the UnknownGap regime for order >= 2. Order 1 always
    // carries the value 1 by the trace-norm constraint (an extension beyond
    // the defining range 1 < l <= m^2, flagged below).
    std::optional<double> value;
    BoundRegime regime = BoundRegime::SpikeFlat;
    // SpikeFlat / UnknownGap: alpha = 1/sqrt(mn), beta = (1-alpha)/(m^2-1);
    // in the gap these still parametrize a valid upper bound, just not one
    // known to be attained. Flat: alpha = beta = 1/m^2.
    double alpha = 0.0;
    double beta = 0.0;
    bool ell_one_convention = false;
};

// alpha = 1/sqrt(mn), beta = (1 - alpha)/(m^2 - 1). Requires 2 <= m <= n.
std::pair<double, double> alpha_beta(int m, int n);

// C(m^2, l) / m^(2l), the cap attained exactly when n = m^3.
double universal_cap(int m, int ell);

// Largest value of the l-th elementary symmetric function over realignment
// spectra of states with trace norm at most 1.
BoundResult b_tilde(int m, int n, int ell);

// Same maximum restricted to separable states on an n x n split; equals
// b_tilde(n, n, l). Closed form spike_esf((1/n, (n-1)/(n(n^2-1)), n^2), l).
double b_sep(int n, int ell);

// Feasibility of the spike-regime extremal construction: the middle mixing
// weight s2 = alpha^2 - beta/(m sqrt(q)) must be nonnegative, where
// n = m q + r. f_qr = sqrt(n^2/q) - sqrt(n/(m q)) is the equivalent test
// statistic against the threshold m^2 - 1.
struct FeasibilityReport {
    bool feasible = false;
    int q = 0;
    int r = 0;
    double s2 = 0.0;
    double f_qr = 0.0;
    double threshold = 0.0;
};

FeasibilityReport construction_feasible(int m, int n);

}  // namespace ccnr
