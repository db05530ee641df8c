#pragma once

#include <Eigen/Dense>
#include <complex>

namespace ccnr {

using Index = Eigen::Index;
using Complex = std::complex<double>;

// Dense complex matrices are the universal numeric carrier. Entries are
// addressed (row, col); composite bipartite indices are row-major, see
// bipartite.hpp.
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

}  // namespace ccnr
