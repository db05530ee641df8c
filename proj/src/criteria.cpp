#include "ccnr/criteria.hpp"

#include "ccnr/spectral.hpp"

namespace ccnr {

namespace {

bool ppt_sufficient(BipartiteDims dims) { return dims.m + dims.n <= 5; }

}  // namespace

CriterionReport ccnr_test(const DensityMatrix& rho) {
    CriterionReport report;
    report.criterion = Criterion::CCNR;
    report.statistic = trace_norm(realign(rho));
    report.verdict = report.statistic > 1.0 + kCriterionTol ? Verdict::CertifiedEntangled
                                                            : Verdict::PassesNecessaryCondition;
    report.ppt_is_sufficient = ppt_sufficient(rho.dims());
    return report;
}

CriterionReport ppt_test(const DensityMatrix& rho) {
    const Matrix pt = partial_transpose(rho);
    const RealVector eig = hermitian_eigenvalues(pt);

    CriterionReport report;
    report.criterion = Criterion::PPT;
    report.statistic = eig(eig.size() - 1);
    report.verdict = report.statistic < -kCriterionTol ? Verdict::CertifiedEntangled
                                                       : Verdict::PassesNecessaryCondition;
    report.ppt_is_sufficient = ppt_sufficient(rho.dims());
    // Deliberately the singular-value route, independent of the eigenvalue
    // statistic above; the two sides feed the PSD <=> trace-norm bridge.
    report.pt_trace_norm = trace_norm(pt);
    return report;
}

}  // namespace ccnr
