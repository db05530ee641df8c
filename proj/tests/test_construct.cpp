#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ccnr/bounds.hpp"
#include "ccnr/construct.hpp"
#include "ccnr/criteria.hpp"
#include "ccnr/explore.hpp"
#include "ccnr/spectral.hpp"
#include "ccnr/symmetric.hpp"
#include "support/oracles.hpp"

using namespace ccnr;

TEST_CASE("extremal_flat: spectrum is exactly flat at 1/m^2") {
    for (int n : {8, 9}) {
        DensityMatrix rho = extremal_flat(2, n);
        CHECK(rho.dims() == BipartiteDims{2, n});

        RealVector s = singular_values(realign(rho));
        REQUIRE(s.size() == 4);
        for (Index i = 0; i < 4; ++i) CHECK(std::abs(s(i) - 0.25) < 1e-10);

        RealVector ref = oracle::eigen_singular_values(realign(rho));
        for (Index i = 0; i < 4; ++i) CHECK(std::abs(ref(i) - 0.25) < 1e-10);

        CHECK(std::abs(trace_norm(realign(rho)) - 1.0) < 1e-10);
    }
}

TEST_CASE("extremal_flat: attains the flat-regime bound for every order") {
    DensityMatrix rho = extremal_flat(2, 8);
    RealVector s = singular_values(realign(rho));
    for (int ell = 1; ell <= 4; ++ell)
        CHECK(std::abs(esf(s, ell) - universal_cap(2, ell)) < 1e-10);
}

TEST_CASE("extremal_flat: regime check") {
    CHECK_THROWS_AS(extremal_flat(2, 7), RegimeError);
    CHECK_THROWS_AS(extremal_flat(1, 8), BadDims);
}

TEST_CASE("extremal_spike(2,3): spike-flat spectrum and block Gram spectrum") {
    auto [rho, params] = extremal_spike(2, 3);
    CHECK(params.q == 1);
    CHECK(params.r == 1);
    const auto [alpha, beta] = alpha_beta(2, 3);
    CHECK(params.alpha == alpha);
    CHECK(params.beta == beta);
    CHECK(std::abs(params.s1 - beta) < 1e-15);          // q = 1
    CHECK(std::abs(params.s3 - 1.0 / 6.0) < 1e-15);     // alpha^2

    Matrix r = realign(rho);
    RealVector s = singular_values(r);
    CHECK(std::abs(s(0) - alpha) < 1e-10);
    for (Index i = 1; i < 4; ++i) CHECK(std::abs(s(i) - beta) < 1e-10);

    // The Gram matrix of the realignment has one eigenvalue alpha^2 and
    // m^2 - 1 eigenvalues beta^2.
    Matrix gram = r * r.adjoint();
    RealVector eig = hermitian_eigenvalues(0.5 * (gram + gram.adjoint()));
    CHECK(std::abs(eig(0) - alpha * alpha) < 1e-12);
    for (Index i = 1; i < 4; ++i) CHECK(std::abs(eig(i) - beta * beta) < 1e-12);

    RealVector ref = oracle::eigen_singular_values(r);
    for (Index i = 0; i < 4; ++i) CHECK(std::abs(s(i) - ref(i)) < 1e-10);
}

TEST_CASE("extremal_spike: attains b_tilde across dims and orders") {
    for (const auto& [m, n] : {std::pair{2, 2}, {2, 3}, {2, 7}, {3, 3}, {3, 10}, {3, 25}}) {
        auto [rho, params] = extremal_spike(m, n);
        RealVector s = singular_values(realign(rho));
        for (int ell = 2; ell <= m * m; ++ell) {
            BoundResult bound = b_tilde(m, n, ell);
            REQUIRE(bound.value.has_value());
            CHECK(std::abs(esf(s, ell) - *bound.value) < 1e-9);
        }
        CHECK(std::abs(s.sum() - 1.0) < 1e-9);  // saturates the trace-norm budget
    }
}

TEST_CASE("extremal_spike(2,2) equals the separable witness entrywise") {
    auto [rho, params] = extremal_spike(2, 2);
    CHECK(params.r == 0);
    CHECK(std::abs(params.s1 - 1.0 / 6.0) < 1e-15);
    CHECK(std::abs(params.s2 - 1.0 / 6.0) < 1e-15);

    RealVector x(4);
    x << 1, 0, 0, 1;
    Matrix expected = (Matrix::Identity(4, 4) + (x * x.transpose()).cast<Complex>()) / 6.0;
    CHECK((rho.mat() - expected).cwiseAbs().maxCoeff() < 1e-12);

    DensityMatrix witness = separable_witness(2);
    CHECK((rho.mat() - witness.mat()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("extremal_spike: infeasible pair raises with diagnostics") {
    try {
        extremal_spike(3, 26);
        FAIL("expected InfeasibleConstruction");
    } catch (const InfeasibleConstruction& e) {
        CHECK(e.report.s2 < 0.0);
        CHECK(e.report.q == 8);
        CHECK(e.report.r == 2);
        const std::string what = e.what();
        CHECK(what.find("s2") != std::string::npos);
    }
    CHECK_THROWS_AS(extremal_spike(3, 2), BadDims);
}

TEST_CASE("all constructed states validate with tiny eigenvalue slack") {
    const auto check_state = [](const DensityMatrix& rho) {
        CHECK(std::abs(rho.mat().trace().real() - 1.0) < 1e-12);
        RealVector eig = oracle::eigen_hermitian_eigenvalues(rho.mat());
        CHECK(eig(eig.size() - 1) >= -1e-12);
    };
    check_state(extremal_flat(2, 8));
    check_state(extremal_flat(2, 10));
    check_state(extremal_spike(2, 3).first);
    check_state(extremal_spike(3, 25).first);
    check_state(separable_witness(2));
    check_state(separable_witness(4));
}

TEST_CASE("separable_witness: spectrum, positivity, and PPT") {
    DensityMatrix w2 = separable_witness(2);
    RealVector s = singular_values(realign(w2));
    CHECK(std::abs(s(0) - 0.5) < 1e-10);
    for (Index i = 1; i < 4; ++i) CHECK(std::abs(s(i) - 1.0 / 6.0) < 1e-10);

    // Passing PPT at (2,2) certifies separability outright.
    CriterionReport rep = ppt_test(w2);
    CHECK(rep.verdict == Verdict::PassesNecessaryCondition);
    CHECK(rep.ppt_is_sufficient);

    DensityMatrix w3 = separable_witness(3);
    CHECK(std::abs(w3.mat().trace().real() - 1.0) < 1e-14);
    RealVector eig3 = hermitian_eigenvalues(w3.mat());
    CHECK(std::abs(eig3(eig3.size() - 1) - 1.0 / 12.0) < 1e-12);
    CHECK(std::abs(eig3(0) - 1.0 / 3.0) < 1e-12);

    // Spectrum (1/n, beta, ..., beta) with beta = (n-1)/(n(n^2-1)).
    RealVector s3 = singular_values(realign(w3));
    CHECK(std::abs(s3(0) - 1.0 / 3.0) < 1e-10);
    for (Index i = 1; i < 9; ++i) CHECK(std::abs(s3(i) - 1.0 / 12.0) < 1e-10);

    CHECK_THROWS_AS(separable_witness(1), BadDims);
}

TEST_CASE("separable witness attains b_sep") {
    for (int n : {2, 3, 4}) {
        RealVector s = singular_values(realign(separable_witness(n)));
        for (int ell = 2; ell <= std::min(4, n * n); ++ell)
            CHECK(std::abs(esf(s, ell) - b_sep(n, ell)) < 1e-9);
    }
}

TEST_CASE("lemma21_witness: layout") {
    auto [x22, y22] = lemma21_witness(2, 2);
    RealVector expected22(4);
    expected22 << 1, 0, 0, 1;
    CHECK((x22 - expected22).cwiseAbs().maxCoeff() == 0.0);
    CHECK((y22 - expected22).cwiseAbs().maxCoeff() == 0.0);

    auto [x23, y23] = lemma21_witness(2, 3);
    CHECK((x23 - expected22).cwiseAbs().maxCoeff() == 0.0);
    RealVector expected_y(9);
    expected_y << 1, 0, 0, 0, 1, 0, 0, 0, 1;
    CHECK((y23 - expected_y).cwiseAbs().maxCoeff() == 0.0);

    CHECK(x23.sum() == 2.0);
    CHECK(y23.sum() == 3.0);
}

TEST_CASE("lemma21_witness: bilinear form equals trace for every state") {
    for (const auto& [m, n] : {std::pair{2, 2}, {2, 3}, {3, 3}, {2, 4}}) {
        auto [x, y] = lemma21_witness(m, n);
        const double root_mn = std::sqrt(static_cast<double>(m) * n);
        for (std::uint64_t i = 0; i < 50; ++i) {
            Rng rng(mix_seed(0x11ECA3u + m * 10 + n, i));
            DensityMatrix rho = sample_density(m, n, rng);
            Matrix r = realign(rho);
            const Complex pairing = (x.cast<Complex>().transpose() * r * y.cast<Complex>())(0);
            CHECK(std::abs(pairing - Complex(1.0, 0.0)) < 1e-12);

            // Normalized, it is a certified lower bound on the top singular value.
            const double lower = std::abs(pairing) / root_mn;
            RealVector s = singular_values(r);
            CHECK(s(0) >= lower - 1e-10);
        }
    }
}

TEST_CASE("lemma21_witness: maximally mixed state attains the bound exactly") {
    auto [x, y] = lemma21_witness(2, 2);
    DensityMatrix mixed = DensityMatrix::make(Matrix::Identity(4, 4) / 4.0, {2, 2});
    Matrix r = realign(mixed);
    const Complex pairing = (x.cast<Complex>().transpose() * r * y.cast<Complex>())(0);
    const double bound = std::abs(pairing) / 2.0;
    RealVector s = singular_values(r);
    CHECK(std::abs(bound - 0.5) < 1e-14);
    CHECK(std::abs(s(0) - bound) < 1e-12);
}
