#pragma once

#include <string>
#include <utility>

#include <unsupported/Eigen/KroneckerProduct>

#include "ccnr/errors.hpp"
#include "ccnr/spectral.hpp"
#include "ccnr/types.hpp"

namespace ccnr {

// Subsystem dimensions of a bipartite system. The first (coarse) factor has
// dimension m, the second (fine) factor n; the composite space has dimension
// m * n.
struct BipartiteDims {
    Index m = 0;
    Index n = 0;

    Index total() const { return m * n; }
    BipartiteDims swapped() const { return {n, m}; }
};

inline bool operator==(BipartiteDims a, BipartiteDims b) { return a.m == b.m && a.n == b.n; }

// Composite index convention, shared by realign / partial_transpose / swap:
// row (r, i) of an (m x n)-partite matrix means coarse r in [0, m), fine i in
// [0, n), flattened row-major. Every index map below goes through this helper.
inline Index composite_index(Index coarse, Index fine, Index fine_dim) {
    return coarse * fine_dim + fine;
}

// A positive semidefinite, unit-trace matrix tagged with its bipartite split.
// Validation (Hermitian within 1e-12 * max|entry|, trace within 1e-10 of 1,
// minimum eigenvalue >= -1e-9) runs once in make(); operations assume a valid
// instance afterwards.
class DensityMatrix {
  public:
    static constexpr double kTraceTol = 1e-10;
    static constexpr double kPsdTol = 1e-9;

    // Throws ValidationError (message carries trace and minimum eigenvalue)
    // or DimsMismatch.
    static DensityMatrix make(Matrix mat, BipartiteDims dims);

    const Matrix& mat() const { return mat_; }
    BipartiteDims dims() const { return dims_; }

  private:
    DensityMatrix(Matrix mat, BipartiteDims dims) : mat_(std::move(mat)), dims_(dims) {}

    Matrix mat_;
    BipartiteDims dims_;
};

// Row-major flattening of a square matrix: (x11, x12, ..., x1n, x21, ...).
template <typename Derived>
Vector vec_row(const Eigen::MatrixBase<Derived>& x) {
    if (x.rows() != x.cols())
        throw NotSquare("vec_row: matrix is " + std::to_string(x.rows()) + "x" +
                        std::to_string(x.cols()));
    const Index n = x.rows();
    Vector v(n * n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) v(composite_index(i, j, n)) = x(i, j);
    return v;
}

// Realignment: the m^2 x n^2 matrix whose row (r, s) is vec_row of the n x n
// block X_rs. Entrywise, realign(X)[(r,s),(i,j)] = X[(r,i),(s,j)].
template <typename Derived>
Matrix realign(const Eigen::MatrixBase<Derived>& x, Index m, Index n) {
    if (x.rows() != m * n || x.cols() != m * n)
        throw DimsMismatch("realign: matrix is " + std::to_string(x.rows()) + "x" +
                           std::to_string(x.cols()) + ", dims give " + std::to_string(m * n));
    Matrix r(m * m, n * n);
    for (Index br = 0; br < m; ++br)
        for (Index bs = 0; bs < m; ++bs)
            for (Index i = 0; i < n; ++i)
                for (Index j = 0; j < n; ++j)
                    r(composite_index(br, bs, m), composite_index(i, j, n)) =
                        x(composite_index(br, i, n), composite_index(bs, j, n));
    return r;
}

// Partial transpose on the second subsystem: every n x n block X_rs replaced
// by its transpose. Hermitian and trace preserving on density matrices.
template <typename Derived>
Matrix partial_transpose(const Eigen::MatrixBase<Derived>& x, Index m, Index n) {
    if (x.rows() != m * n || x.cols() != m * n)
        throw DimsMismatch("partial_transpose: matrix is " + std::to_string(x.rows()) + "x" +
                           std::to_string(x.cols()) + ", dims give " + std::to_string(m * n));
    Matrix t(m * n, m * n);
    for (Index br = 0; br < m; ++br)
        for (Index bs = 0; bs < m; ++bs)
            for (Index i = 0; i < n; ++i)
                for (Index j = 0; j < n; ++j)
                    t(composite_index(br, i, n), composite_index(bs, j, n)) =
                        x(composite_index(br, j, n), composite_index(bs, i, n));
    return t;
}

// Kronecker product with the first factor indexing the coarse blocks, so that
// tensor(A, B) viewed as an (m, n)-partite matrix has blocks X_rs = A_rs * B.
template <typename DerivedA, typename DerivedB>
Matrix tensor(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    return Eigen::kroneckerProduct(a, b);
}

// Exchange the two subsystems: result[(i,r),(j,s)] = input[(r,i),(s,j)].
template <typename Derived>
Matrix swap_subsystems(const Eigen::MatrixBase<Derived>& x, Index m, Index n) {
    if (x.rows() != m * n || x.cols() != m * n)
        throw DimsMismatch("swap_subsystems: matrix is " + std::to_string(x.rows()) + "x" +
                           std::to_string(x.cols()) + ", dims give " + std::to_string(m * n));
    Matrix y(m * n, m * n);
    for (Index r = 0; r < m; ++r)
        for (Index i = 0; i < n; ++i)
            for (Index s = 0; s < m; ++s)
                for (Index j = 0; j < n; ++j)
                    y(composite_index(i, r, m), composite_index(j, s, m)) =
                        x(composite_index(r, i, n), composite_index(s, j, n));
    return y;
}

// DensityMatrix wrappers.
Matrix realign(const DensityMatrix& rho);
Matrix partial_transpose(const DensityMatrix& rho);
DensityMatrix swap_subsystems(const DensityMatrix& rho);

}  // namespace ccnr
