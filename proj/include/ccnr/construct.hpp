#pragma once

#include <utility>

#include "ccnr/bipartite.hpp"
#include "ccnr/bounds.hpp"
#include "ccnr/errors.hpp"

namespace ccnr {

// Decomposition n = m q + r and the mixing weights of the spike-regime
// extremal state rho = s1 rho1 + s2 rho2 + s3 rho3:
//   s1 = beta / sqrt(q),  s2 = alpha^2 - beta / (m sqrt(q)),  s3 = alpha^2.
// s1 and s3 are nonnegative by construction; the state exists iff s2 >= 0.
struct ConstructionParams {
    int m = 0;
    int n = 0;
    int q = 0;
    int r = 0;
    double alpha = 0.0;
    double beta = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;
};

// Raised by extremal_spike when s2 < 0; carries the feasibility diagnostics.
struct InfeasibleConstruction : Error {
    InfeasibleConstruction(std::string msg, FeasibilityReport rep)
        : Error(std::move(msg)), report(rep) {}
    FeasibilityReport report;
};

// State whose realignment has the flat spectrum (1/m^2, ..., 1/m^2), built
// from the basis expansion (1/m^3) sum_kl E_kl (x) F_kl with
// F_kl = (E_kl (x) I_{m^2}) (+) O_{n-m^3}. Requires n >= m^3 (RegimeError).
DensityMatrix extremal_flat(int m, int n);

// State whose realignment has the spike-flat spectrum (alpha, beta, ...,
// beta). Requires m <= n and a feasible construction (s2 >= 0); throws
// InfeasibleConstruction otherwise, BadDims on bad dims.
std::pair<DensityMatrix, ConstructionParams> extremal_spike(int m, int n);

// The m = n separable state (I + x x^t) / (n (n+1)) with x = vec(I_n).
// Coincides entrywise with extremal_spike(n, n).
DensityMatrix separable_witness(int n);

// The 0/1 vectors certifying s1 >= 1/sqrt(mn): x has m ones at the 1-based
// positions k(m+1)+1, y has n ones at k(n+1)+1, and for every density matrix
// x^t realign(rho) y / sqrt(mn) = trace(rho) / sqrt(mn).
std::pair<RealVector, RealVector> lemma21_witness(int m, int n);

}  // namespace ccnr
