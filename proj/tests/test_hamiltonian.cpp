#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "susyxxz/hamiltonian.hpp"

using namespace susyxxz;

namespace {

std::mt19937_64 rng(977);

cplx random_y(double lo = 0.2, double hi = 1.8) {
    std::uniform_real_distribution<double> rho(lo, hi), ang(0.0, 2.0 * M_PI);
    return std::polar(rho(rng), ang(rng));
}

}  // namespace

TEST_CASE("boundary coefficients at spin 1/2: c_1 = 1/2, c_2 = 0") {
    SpinParams p(1);
    auto c = boundary_coefficients(p);
    CHECK(c[0] == 0.0);
    CHECK(c[1] == doctest::Approx(0.5));
    CHECK(c[2] == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("two-site density at spin 1/2 equals the hand matrix") {
    SpinParams p(1);
    Eigen::MatrixXcd h = density_explicit(p).dense();
    Eigen::MatrixXcd want(4, 4);
    want << 1, 0, 0, 0, 0, 0.5, -1, 0, 0, -1, 0.5, 0, 0, 0, 0, 1;
    CHECK((h - want).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("density routes agree and the result does not depend on y") {
    for (int ell = 1; ell <= 3; ++ell) {
        SpinParams p(ell);
        LinearMap ref = density_explicit(p);
        CHECK(max_abs_diff(ref, density_from_supercharge(p, 0.0)) < 1e-12);
        for (int t = 0; t < 10; ++t)
            CHECK(max_abs_diff(ref, density_from_supercharge(p, random_y())) < 1e-12);
    }
}

TEST_CASE("density diagonal, symmetries, hermiticity") {
    for (int ell = 1; ell <= 4; ++ell) {
        SpinParams p(ell);
        LinearMap h = density_explicit(p);
        auto c = boundary_coefficients(p);
        // corner entry <0,ell| h |0,ell>: M1 = 0, M2 = ell
        const index_t idx = index_t(0) * p.dim + p.ell;
        CHECK(std::abs(h.dense()(idx, idx) - (c[1] + c[ell + 1])) < 1e-13);
        CHECK(h.hermiticity_residual() < 1e-14);
        LinearMap R = spin_reversal(p, 2), P = parity_op(p, 2);
        CHECK(max_abs_diff(R * h * R, h) < 1e-13);
        CHECK(max_abs_diff(P * h * P, h) < 1e-13);
    }
}

TEST_CASE("boundary term: y = 0 diagonal and label sweep") {
    for (int ell = 1; ell <= 3; ++ell) {
        SpinParams p(ell);
        Eigen::MatrixXcd hb0 = boundary_term(p, 0.0, ell + 1).dense();
        auto c = boundary_coefficients(p);
        for (int m = 0; m <= ell; ++m) CHECK(std::abs(hb0(m, m) - c[m]) < 1e-14);
        CHECK((hb0 - hb0.diagonal().asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff() < 1e-14);

        for (int k = 0; k <= ell; ++k) {
            cplx y = random_y();
            CHECK(max_abs_diff(boundary_term(p, y, k), boundary_term(p, rotate_y(p, y, k), ell + 1)) <
                  1e-13);
        }
    }
}

TEST_CASE("boundary term at spin 1/2 reduces to a field in the Pauli basis") {
    // h_B(y) = e0 * 1 + sum_a lambda_a sigma^a with
    // e0 = (1 + 5 rho^2 + rho^4) / (4 (1 - rho^2 + rho^4)),
    // lambda = (-rho cos t, -rho sin t, -(1 - rho^2)/4) / (1 + rho^2),  y = rho e^{it}
    SpinParams p(1);
    Eigen::Matrix2cd sx, sy, sz;
    sx << 0, 1, 1, 0;
    sy << 0, cplx(0, -1), cplx(0, 1), 0;
    sz << 1, 0, 0, -1;
    for (double rho : {0.0, 0.4, 0.8, 1.2, 1.6})
        for (double th : {0.0, 1.1, 2.2, 3.3, 4.4}) {
            const cplx y = std::polar(rho, th);
            Eigen::Matrix2cd hb = boundary_term(p, y, 2).dense();
            const double r2 = rho * rho, r4 = r2 * r2;
            const double e0 = (1.0 + 5.0 * r2 + r4) / (4.0 * (1.0 - r2 + r4));
            const double l1 = -rho * std::cos(th) / (1.0 + r2);
            const double l2 = -rho * std::sin(th) / (1.0 + r2);
            const double l3 = -0.25 * (1.0 - r2) / (1.0 + r2);
            Eigen::Matrix2cd want = e0 * Eigen::Matrix2cd::Identity() + l1 * sx + l2 * sy + l3 * sz;
            CHECK((hb - want).cwiseAbs().maxCoeff() < 1e-13);
        }
}

TEST_CASE("assembled chain matches the spin-1/2 reference") {
    for (int L : {2, 4, 5, 8}) {
        auto Hs = assemble(SuperchargeSpec::make(1, L, 0.0));
        CHECK(max_abs_diff(Hs.H, pauli_reference(L)) < 1e-13);
    }
}

TEST_CASE("assembled chain equals the supercharge anticommutator") {
    auto Hs = assemble(SuperchargeSpec::make(1, 3, cplx(0.5, 0.0), 1, 2));
    LinearMap Ha = anticommutator_hamiltonian(Hs.spec);
    const double scale = std::max(1.0, Ha.op_norm_est());
    CHECK(max_abs_diff(Hs.H, Ha) < 1e-11 * scale);

    struct Case {
        int ell, L, j, k;
        cplx y;
    } cases[] = {{1, 4, 0, 0, cplx(0.9, -0.4)},
                 {2, 3, 1, 3, cplx(0.7, 0.2)},
                 {2, 2, 0, 2, cplx(1.3, 0.0)},
                 {3, 2, 4, 1, cplx(0.4, 0.8)}};
    for (auto c : cases) {
        auto S = SuperchargeSpec::make(c.ell, c.L, c.y, c.j, c.k);
        auto A = assemble(S);
        LinearMap B = anticommutator_hamiltonian(S);
        CHECK(max_abs_diff(A.H, B) < 1e-11 * std::max(1.0, B.op_norm_est()));
        CHECK(A.H.hermiticity_residual() < 1e-12);
    }
}

TEST_CASE("undecorated chain commutes with magnetisation") {
    SpinParams p(2);
    auto Hs = assemble(SuperchargeSpec::make(2, 3, 0.0));
    LinearMap M = magnetisation(p, 3);
    CHECK(max_abs_diff(Hs.H * M, M * Hs.H) < 1e-12);
}

TEST_CASE("pauli reference trace carries the energy shift") {
    for (int L : {2, 3, 6}) {
        Eigen::MatrixXcd H = pauli_reference(L).dense();
        CHECK(H.trace().real() == doctest::Approx((3.0 * L - 1.0) / 4.0 * double(1 << L)));
        CHECK(std::abs(H.trace().imag()) < 1e-12);
    }
}

TEST_CASE("assembly preconditions") {
    CHECK_THROWS_AS(assemble(SuperchargeSpec::make(1, 1, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(boundary_term(SpinParams(1), 0.0, 3), std::out_of_range);
    CHECK_THROWS_AS(density_beta(SpinParams(1), 0, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(pauli_reference(1), std::invalid_argument);
}
