#pragma once

#include <optional>

#include "ccnr/bipartite.hpp"

namespace ccnr {

enum class Criterion { CCNR, PPT };

// A passing state is NOT certified separable; both tests are necessary
// conditions only, and the verdict vocabulary is chosen to keep that visible.
enum class Verdict { PassesNecessaryCondition, CertifiedEntangled };

// Shared by both tests: an order above spectral noise, far below any
// physically meaningful violation.
inline constexpr double kCriterionTol = 1e-9;

struct CriterionReport {
    Criterion criterion;
    // CCNR: trace norm of the realignment. PPT: minimum eigenvalue of the
    // partial transpose.
    double statistic = 0.0;
    Verdict verdict = Verdict::PassesNecessaryCondition;
    // PPT is necessary and sufficient when m + n <= 5.
    bool ppt_is_sufficient = false;
    // PPT only: trace norm of the partial transpose, the bridge form of the
    // criterion (PSD iff this is at most 1).
    std::optional<double> pt_trace_norm;
};

// CCNR / realignment criterion: separable states have trace_norm(realign(rho))
// at most 1; a statistic above 1 + kCriterionTol certifies entanglement.
CriterionReport ccnr_test(const DensityMatrix& rho);

// PPT criterion: separable states have positive semidefinite partial
// transpose; a minimum eigenvalue below -kCriterionTol certifies entanglement.
CriterionReport ppt_test(const DensityMatrix& rho);

}  // namespace ccnr
