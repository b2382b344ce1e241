#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "susyxxz/spectra.hpp"

using namespace susyxxz;

namespace {

Eigen::VectorXd dense_spectrum(int ell, int L, cplx y = 0.0, int j = -1, int k = -1) {
    auto hs = assemble(SuperchargeSpec::make(ell, L, y, j, k));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hs.H.dense(), Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

bool contains_within(const Eigen::VectorXd& v, double x, double tol) {
    for (index_t i = 0; i < v.size(); ++i)
        if (std::abs(v(i) - x) < tol) return true;
    return false;
}

}  // namespace

TEST_CASE("two-site spectrum at spin 1/2 is {0, 1, 2, 2}") {
    auto rep = full_spectrum(assemble(SuperchargeSpec::make(1, 2, 0.0)));
    REQUIRE(rep.eigenvalues.size() == 4);
    CHECK(std::abs(rep.eigenvalues(0) - 0.0) < 1e-12);
    CHECK(std::abs(rep.eigenvalues(1) - 1.0) < 1e-12);
    CHECK(std::abs(rep.eigenvalues(2) - 2.0) < 1e-12);
    CHECK(std::abs(rep.eigenvalues(3) - 2.0) < 1e-12);
    CHECK(rep.zero_multiplicity == 1);
    CHECK(rep.zero_threshold > 0.0);
    CHECK(rep.zero_threshold < 1e-6);
}

TEST_CASE("three-site spectrum at spin 1/2 is {0, 2-sqrt(2), 2, 2, 2, 3, 3, 2+sqrt(2)}") {
    auto rep = full_spectrum(assemble(SuperchargeSpec::make(1, 3, 0.0)));
    const double s2 = std::sqrt(2.0);
    const double want[] = {0.0, 2.0 - s2, 2.0, 2.0, 2.0, 3.0, 3.0, 2.0 + s2};
    REQUIRE(rep.eigenvalues.size() == 8);
    for (int i = 0; i < 8; ++i) CHECK(std::abs(rep.eigenvalues(i) - want[i]) < 1e-12);
    CHECK(rep.zero_multiplicity == 1);
}

TEST_CASE("full_spectrum refuses dimensions above the dense cap") {
    auto hs = assemble(SuperchargeSpec::make(1, 13, 0.0));
    CHECK_THROWS_AS(full_spectrum(hs), std::invalid_argument);
    auto small = assemble(SuperchargeSpec::make(1, 7, 0.0));
    CHECK_THROWS_AS(full_spectrum(small, 100), std::invalid_argument);
    CHECK_NOTHROW(full_spectrum(small, 128));
}

TEST_CASE("bottom eigenpairs match the dense solver through the filtered route") {
    struct Probe {
        int ell, L, j, k;
        cplx y;
    };
    for (const auto& pr : {Probe{1, 8, -1, -1, 0.0}, Probe{2, 5, 1, 0, cplx(0.7, 0.0)}}) {
        auto hs = assemble(SuperchargeSpec::make(pr.ell, pr.L, pr.y, pr.j, pr.k));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hs.H.dense(), Eigen::EigenvaluesOnly);
        auto bp = bottom_eigenpairs(hs.H, 6);
        const double scale = hs.H.op_norm_est();
        CHECK(bp.rounds >= 1);
        CHECK(bp.max_residual < 1e-9 * scale);
        for (int i = 0; i < 6; ++i) CHECK(std::abs(bp.values(i) - es.eigenvalues()(i)) < 1e-9 * scale);
        Eigen::MatrixXcd gram = bp.vectors.adjoint() * bp.vectors;
        CHECK((gram - Eigen::MatrixXcd::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("bottom eigenpairs fall back to the dense solver on small problems") {
    auto hs = assemble(SuperchargeSpec::make(1, 4, 0.0));
    auto bp = bottom_eigenpairs(hs.H, 3);
    CHECK(bp.rounds == 0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hs.H.dense(), Eigen::EigenvaluesOnly);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(bp.values(i) - es.eigenvalues()(i)) < 1e-12);
}

TEST_CASE("bottom eigenpairs validate their arguments") {
    auto hs = assemble(SuperchargeSpec::make(1, 3, 0.0));
    CHECK_THROWS_AS(bottom_eigenpairs(hs.H, 0), std::invalid_argument);
    CHECK_THROWS_AS(bottom_eigenpairs(hs.H, 9), std::invalid_argument);
    LinearMap Q = global_supercharge(SuperchargeSpec::make(1, 3, 0.0));
    CHECK_THROWS_AS(bottom_eigenpairs(Q, 1), std::invalid_argument);
}

TEST_CASE("zero multiplicity is one without decoration and zero away from it") {
    CHECK(zero_multiplicity(assemble(SuperchargeSpec::make(1, 3, 0.0)).H) == 1);
    CHECK(zero_multiplicity(assemble(SuperchargeSpec::make(2, 3, 0.0)).H) == 1);
    CHECK(zero_multiplicity(assemble(SuperchargeSpec::make(1, 4, cplx(0.6, 0.0), 1, 2)).H) == 0);
    // force the filtered route with a tiny dense cap
    CHECK(zero_multiplicity(assemble(SuperchargeSpec::make(1, 8, 0.0)).H, 64) == 1);
    CHECK(zero_multiplicity(assemble(SuperchargeSpec::make(1, 7, cplx(0.5, 0.0), 0, 1)).H, 64) == 0);
}

TEST_CASE("zero-energy states of the shortest chains") {
    auto g1 = zero_energy_state(1, 1);
    CHECK(g1.vec.amps(0) == cplx(1.0, 0.0));
    CHECK(g1.vec.amps(1) == cplx(0.0, 0.0));
    CHECK(g1.q_residual < 1e-14);

    auto g2 = zero_energy_state(1, 2);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(g2.vec.component(std::vector<int>{0, 1}) - r) < 1e-12);
    CHECK(std::abs(g2.vec.component(std::vector<int>{1, 0}) - r) < 1e-12);
    CHECK(std::abs(g2.vec.component(std::vector<int>{0, 0})) < 1e-12);
    CHECK(std::abs(g2.vec.component(std::vector<int>{1, 1})) < 1e-12);
    CHECK(g2.energy < 1e-12);
    CHECK(g2.q_residual < 1e-10);
    CHECK(g2.qdag_residual < 1e-10);
}

TEST_CASE("zero-energy state magnetisation is 0 for even length, ell/2 for odd") {
    struct Probe {
        int ell, L;
        double want;
    };
    for (const auto& pr : {Probe{1, 3, 0.5}, Probe{2, 4, 0.0}, Probe{2, 5, 1.0}}) {
        SpinParams p(pr.ell);
        auto g = zero_energy_state(pr.ell, pr.L);
        Eigen::VectorXcd m = magnetisation(p, pr.L).apply(g.vec.amps);
        CHECK((m - pr.want * g.vec.amps).norm() < 1e-10);
    }
}

TEST_CASE("zero-energy state is parity even with small supercharge residuals") {
    for (auto [ell, L] : {std::pair{1, 4}, std::pair{1, 5}, std::pair{2, 3}}) {
        SpinParams p(ell);
        auto g = zero_energy_state(ell, L);
        CHECK((parity_op(p, L).apply(g.vec.amps) - g.vec.amps).norm() < 1e-10);
        CHECK(g.q_residual < 1e-10);
        CHECK(g.qdag_residual < 1e-10);
        const cplx c = g.vec.component(alternating_digits(ell, L));
        CHECK(c.real() > 0.0);
        CHECK(std::abs(c.imag()) < 1e-12);
    }
}

TEST_CASE("zero-energy state through the filtered route") {
    auto g = zero_energy_state(1, 8, 64);
    CHECK(g.energy < 1e-10);
    CHECK(g.q_residual < 1e-10);
    CHECK(g.qdag_residual < 1e-10);
    const cplx c = g.vec.component(alternating_digits(1, 8));
    CHECK(c.real() > 0.0);
}

TEST_CASE("positive eigenvalues pair with a neighbouring length") {
    // Decorated chain: at (ell=1, j=1, k=2, y=0.5) the L=3 spectrum splits into
    // five eigenvalues shared with L=4 and three shared with L=2.
    auto e2 = dense_spectrum(1, 2, cplx(0.5, 0.0), 1, 2);
    auto e3 = dense_spectrum(1, 3, cplx(0.5, 0.0), 1, 2);
    auto e4 = dense_spectrum(1, 4, cplx(0.5, 0.0), 1, 2);
    auto rep = doublet_match(e3, e4, 1e-9, 1e-8);
    CHECK(rep.matched.size() == 5);
    REQUIRE(rep.unmatched.size() == 3);
    CHECK(!rep.all_matched);
    const double down[] = {0.803459094271, 2.503268256838, 3.462503418122};
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(rep.unmatched[i] - down[i]) < 1e-9);
        CHECK(contains_within(e2, rep.unmatched[i], 1e-9));
    }

    // Undecorated chain: zero modes are exempt from matching, the doubled
    // positive pair {2, 2} of L=2 reappears at L=3 and the 1 drops to L=1.
    auto f2 = dense_spectrum(1, 2);
    auto f3 = dense_spectrum(1, 3);
    auto rep0 = doublet_match(f2, f3, 1e-9, 1e-8);
    CHECK(rep0.matched.size() == 2);
    REQUIRE(rep0.unmatched.size() == 1);
    CHECK(std::abs(rep0.unmatched[0] - 1.0) < 1e-12);
    for (const auto& [lo, hi] : rep0.matched) {
        CHECK(std::abs(lo - 2.0) < 1e-12);
        CHECK(std::abs(hi - 2.0) < 1e-12);
    }
}

TEST_CASE("conformal fit recovers exact model data") {
    const double vf = 1.5 * std::sqrt(3.0), c = 1.0;
    const double e_bulk = 0.3, e_bdr = -0.1, h = 0.375;
    std::vector<std::pair<int, double>> series;
    for (int L : {5, 7, 9, 11, 13})
        series.emplace_back(L, e_bulk * L + e_bdr + M_PI * vf / L * (h - c / 24.0));
    auto fit = conformal_fit(series, vf, c);
    CHECK(std::abs(fit.e_bulk - e_bulk) < 1e-10);
    CHECK(std::abs(fit.e_boundary - e_bdr) < 1e-10);
    CHECK(std::abs(fit.h - h) < 1e-10);
    CHECK(fit.rms < 1e-10);
    CHECK_THROWS_AS(conformal_fit({{2, 0.0}, {4, 0.0}, {6, 0.0}}, vf, c), std::invalid_argument);
}

TEST_CASE("zero-energy series gives the singlet weight 1/24") {
    const double vf = 1.5 * std::sqrt(3.0);
    std::vector<std::pair<int, double>> series;
    for (int L : {4, 6, 8, 10}) {
        auto rep = full_spectrum(assemble(SuperchargeSpec::make(1, L, 0.0)));
        series.emplace_back(L, rep.eigenvalues(0));
    }
    auto fit = conformal_fit(series, vf, 1.0);
    CHECK(std::abs(fit.h - 1.0 / 24.0) < 1e-10);
    CHECK(std::abs(weight_extrapolation(series, vf, 1.0) - 1.0 / 24.0) < 1e-10);
}

TEST_CASE("first-excited weights extrapolate to 3/8") {
    const double vf = 1.5 * std::sqrt(3.0);
    std::vector<std::pair<int, double>> series;
    for (int L = 5; L <= 13; L += 2) {
        auto hs = assemble(SuperchargeSpec::make(1, L, 0.0));
        auto bp = bottom_eigenpairs(hs.H, 2);
        CHECK(bp.values(0) < 1e-10);
        series.emplace_back(L, bp.values(1));
    }
    CHECK(std::abs(weight_extrapolation(series, vf, 1.0) - 0.375) < 0.02);
    // synthetic series with a pure 1/L^2 correction is recovered exactly
    std::vector<std::pair<int, double>> model;
    for (int L : {7, 9, 11})
        model.emplace_back(L, M_PI * vf / L * (0.375 - 1.0 / 24.0) + 0.8 / (L * L));
    CHECK(std::abs(weight_extrapolation(model, vf, 1.0) - 0.375) < 1e-12);
}
