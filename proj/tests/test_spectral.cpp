#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ccnr/bipartite.hpp"
#include "ccnr/spectral.hpp"
#include "support/oracles.hpp"

using namespace ccnr;

namespace {

Matrix permutation(Index n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Index> perm(n);
    for (Index i = 0; i < n; ++i) perm[i] = i;
    for (Index i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i + 1))]);
    Matrix p = Matrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) p(perm[i], i) = 1.0;
    return p;
}

}  // namespace

TEST_CASE("hermitian eigenvalues: identity and Pauli-X") {
    RealVector e2 = hermitian_eigenvalues(Matrix::Identity(2, 2));
    CHECK(e2(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(e2(1) == doctest::Approx(1.0).epsilon(1e-14));

    Matrix x(2, 2);
    x << 0, 1, 1, 0;
    RealVector ex = hermitian_eigenvalues(x);
    CHECK(std::abs(ex(0) - 1.0) < 1e-14);
    CHECK(std::abs(ex(1) + 1.0) < 1e-14);
}

TEST_CASE("hermitian eigenvalues: partially transposed Bell projector") {
    Matrix bell = Matrix::Zero(4, 4);
    bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
    Matrix pt = partial_transpose(bell, 2, 2);

    RealVector eig = hermitian_eigenvalues(pt);
    CHECK(std::abs(eig(0) - 0.5) < 1e-12);
    CHECK(std::abs(eig(1) - 0.5) < 1e-12);
    CHECK(std::abs(eig(2) - 0.5) < 1e-12);
    CHECK(std::abs(eig(3) + 0.5) < 1e-12);

    RealVector ref = oracle::eigen_hermitian_eigenvalues(pt);
    for (Index i = 0; i < 4; ++i) CHECK(std::abs(eig(i) - ref(i)) < 1e-12);
}

TEST_CASE("hermitian eigenvalues: diagonal real matrix is returned sorted") {
    Matrix d = Matrix::Zero(4, 4);
    d(0, 0) = 0.25;
    d(1, 1) = -1.5;
    d(2, 2) = 3.0;
    d(3, 3) = 0.0;
    RealVector eig = hermitian_eigenvalues(d);
    CHECK(eig(0) == 3.0);
    CHECK(eig(1) == 0.25);
    CHECK(eig(2) == 0.0);
    CHECK(eig(3) == -1.5);
}

TEST_CASE("hermitian eigenvalues: random matrices match the reference solver") {
    for (Index n = 2; n <= 16; n += 2) {
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            Matrix h = oracle::random_hermitian(n, 1000 * n + seed);
            RealVector mine = hermitian_eigenvalues(h);
            RealVector ref = oracle::eigen_hermitian_eigenvalues(h);
            const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
            for (Index i = 0; i < n; ++i) CHECK(std::abs(mine(i) - ref(i)) <= 1e-11 * scale);
        }
    }
}

TEST_CASE("hermitian eigenvalues: sum equals trace") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Matrix h = oracle::random_hermitian(7, 50 + seed);
        RealVector eig = hermitian_eigenvalues(h);
        const double tr = h.trace().real();
        CHECK(std::abs(eig.sum() - tr) <= 1e-10 * (1.0 + std::abs(tr)));
    }
}

TEST_CASE("hermitian eigenvalues: permutation conjugation leaves the spectrum") {
    Matrix h = oracle::random_hermitian(8, 77);
    Matrix p = permutation(8, 78);
    RealVector base = hermitian_eigenvalues(h);
    RealVector conj = hermitian_eigenvalues((p * h * p.transpose()).eval());
    for (Index i = 0; i < 8; ++i) CHECK(std::abs(base(i) - conj(i)) < 1e-10);
}

TEST_CASE("hermitian eigenvalues: input checks") {
    CHECK_THROWS_AS(hermitian_eigenvalues(Matrix::Zero(2, 3)), NotSquare);
    Matrix bad(2, 2);
    bad << 1.0, Complex(0.0, 1.0), Complex(0.0, 1.0), 1.0;  // skew part too large
    CHECK_THROWS_AS(hermitian_eigenvalues(bad), NotHermitian);
    Matrix one(1, 1);
    one << 4.25;
    CHECK(hermitian_eigenvalues(one)(0) == 4.25);
}

TEST_CASE("singular values: scaled identity and nilpotent block") {
    RealVector s = singular_values(0.5 * Matrix::Identity(4, 4));
    for (Index i = 0; i < 4; ++i) CHECK(std::abs(s(i) - 0.5) < 1e-14);

    Matrix jordan(2, 2);
    jordan << 0, 1, 0, 0;
    RealVector sj = singular_values(jordan);
    CHECK(std::abs(sj(0) - 1.0) < 1e-14);
    CHECK(std::abs(sj(1)) < 1e-14);
}

TEST_CASE("singular values: realigned maximally mixed state on (2,3)") {
    Matrix rho = Matrix::Identity(6, 6) / 6.0;
    RealVector s = singular_values(realign(rho, 2, 3));
    CHECK(s.size() == 4);
    CHECK(std::abs(s(0) - 1.0 / std::sqrt(6.0)) < 1e-12);
    for (Index i = 1; i < 4; ++i) CHECK(std::abs(s(i)) < 1e-12);
}

TEST_CASE("singular values: Frobenius consistency on random matrices") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Matrix a = oracle::random_complex(5, 9, 400 + seed);
        RealVector s = singular_values(a);
        CHECK(s.size() == 5);
        for (Index i = 0; i + 1 < s.size(); ++i) CHECK(s(i) >= s(i + 1));
        CHECK(s.minCoeff() >= 0.0);
        const double frob2 = a.squaredNorm();
        CHECK(std::abs(s.squaredNorm() - frob2) <= 1e-10 * frob2);
    }
}

TEST_CASE("singular values: match the reference SVD on random shapes") {
    const Index shapes[][2] = {{2, 2}, {3, 7}, {9, 4}, {16, 16}, {4, 16}};
    for (const auto& shape : shapes) {
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            Matrix a = oracle::random_complex(shape[0], shape[1], 7000 + seed);
            RealVector mine = singular_values(a);
            RealVector ref = oracle::eigen_singular_values(a);
            const double scale = std::max(1.0, ref(0));
            for (Index i = 0; i < mine.size(); ++i)
                CHECK(std::abs(mine(i) - ref(i)) <= 1e-10 * scale);
        }
    }
}

TEST_CASE("singular values of a Hermitian matrix are absolute eigenvalues") {
    Matrix h = oracle::random_hermitian(6, 99);
    RealVector s = singular_values(h);
    RealVector eig = hermitian_eigenvalues(h);
    RealVector abs_eig = eig.cwiseAbs();
    std::sort(abs_eig.begin(), abs_eig.end(), std::greater<double>());
    for (Index i = 0; i < 6; ++i) CHECK(std::abs(s(i) - abs_eig(i)) < 1e-10);
}

TEST_CASE("singular values: permutation invariance") {
    Matrix a = oracle::random_complex(6, 8, 123);
    Matrix pl = permutation(6, 5);
    Matrix pr = permutation(8, 6);
    RealVector base = singular_values(a);
    RealVector permuted = singular_values((pl * a * pr).eval());
    for (Index i = 0; i < base.size(); ++i) CHECK(std::abs(base(i) - permuted(i)) < 1e-10);
}

TEST_CASE("trace norm: identity and zero") {
    CHECK(std::abs(trace_norm(Matrix::Identity(3, 3)) - 3.0) < 1e-12);
    CHECK(trace_norm(Matrix::Zero(3, 3)) == 0.0);
}

TEST_CASE("trace norm: Bell realignment equals 2") {
    Matrix bell = Matrix::Zero(4, 4);
    bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
    Matrix r = realign(bell, 2, 2);
    CHECK((r - 0.5 * Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(std::abs(trace_norm(r) - 2.0) < 1e-12);
}

TEST_CASE("trace norm: realigned pure product state equals 1") {
    // Projectors onto fixed unit vectors on each factor.
    Vector u(2), v(3);
    u << Complex(0.6, 0.0), Complex(0.0, 0.8);
    v << Complex(0.5, 0.5), Complex(0.5, -0.5), Complex(0.0, 0.0);
    Matrix rho = tensor((u * u.adjoint()).eval(), (v * v.adjoint()).eval());
    CHECK(std::abs(trace_norm(realign(rho, 2, 3)) - 1.0) < 1e-12);
}
