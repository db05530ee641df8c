#pragma once

#include "ccnr/types.hpp"

namespace ccnr {

// Eigenvalues of a Hermitian matrix, sorted descending. Uses cyclic Jacobi
// with complex rotations; accurate to ~1e-14 relative at the sizes this
// library targets (dimension up to a few hundred).
//
// Throws NotSquare, and NotHermitian when the symmetry defect exceeds
// 1e-12 * max|entry|. Inputs failing the check are rejected rather than
// symmetrized so that caller bugs surface.
RealVector hermitian_eigenvalues(const Matrix& h);

// Singular values of an arbitrary matrix, sorted descending, length
// min(rows, cols). Computed as square roots of the eigenvalues of the
// smaller Gram side. Eigenvalues below 1e-12 * lambda_max are reported as
// exactly zero: the Gram product cannot resolve singular values below about
// 1e-6 * ||a||, and square-rooting its rounding noise would otherwise smear
// rank-deficient spectra by ~1e-8 * ||a||.
RealVector singular_values(const Matrix& a);

// Sum of singular values.
double trace_norm(const Matrix& a);

namespace detail {

// Jacobi on a Hermitian matrix known valid by construction (no symmetry
// check). Destroys its argument.
RealVector jacobi_eigenvalues(Matrix h);

}  // namespace detail

}  // namespace ccnr
