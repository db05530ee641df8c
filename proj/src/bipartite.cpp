#include "ccnr/bipartite.hpp"

#include <cmath>
#include <sstream>

namespace ccnr {

DensityMatrix DensityMatrix::make(Matrix mat, BipartiteDims dims) {
    if (dims.m < 1 || dims.n < 1)
        throw DimsMismatch("DensityMatrix: dims must be positive, got (" +
                           std::to_string(dims.m) + ", " + std::to_string(dims.n) + ")");
    if (mat.rows() != dims.total() || mat.cols() != dims.total())
        throw DimsMismatch("DensityMatrix: matrix is " + std::to_string(mat.rows()) + "x" +
                           std::to_string(mat.cols()) + ", dims (" + std::to_string(dims.m) +
                           ", " + std::to_string(dims.n) + ") require " +
                           std::to_string(dims.total()));
    if (!mat.allFinite()) throw ValidationError("DensityMatrix: non-finite entry");

    const double scale = mat.cwiseAbs().maxCoeff();
    const double defect = (mat - mat.adjoint()).cwiseAbs().maxCoeff();
    if (defect > 1e-12 * scale)
        throw ValidationError("DensityMatrix: not Hermitian, symmetry defect " +
                              std::to_string(defect));

    const double trace = mat.trace().real();
    const RealVector eig = detail::jacobi_eigenvalues(mat);
    const double min_eig = eig(eig.size() - 1);

    if (std::abs(trace - 1.0) > kTraceTol || min_eig < -kPsdTol) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "DensityMatrix: trace = " << trace << ", min eigenvalue = " << min_eig;
        throw ValidationError(msg.str());
    }
    return DensityMatrix(std::move(mat), dims);
}

Matrix realign(const DensityMatrix& rho) {
    return realign(rho.mat(), rho.dims().m, rho.dims().n);
}

Matrix partial_transpose(const DensityMatrix& rho) {
    return partial_transpose(rho.mat(), rho.dims().m, rho.dims().n);
}

DensityMatrix swap_subsystems(const DensityMatrix& rho) {
    return DensityMatrix::make(swap_subsystems(rho.mat(), rho.dims().m, rho.dims().n),
                               rho.dims().swapped());
}

}  // namespace ccnr
