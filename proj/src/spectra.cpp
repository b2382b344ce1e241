#include "susyxxz/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace susyxxz {

namespace {

double zero_cut_for(const LinearMap& H) { return 1e-8 * std::max(1.0, H.op_norm_est()); }

// y = T_deg(t(H)) x columnwise, with t mapping [a, b] to [-1, 1]; eigenvalues
// below a are amplified exponentially in the degree.
Eigen::MatrixXcd cheb_filter(const LinearMap& H, const Eigen::MatrixXcd& X, double a, double b,
                             int deg) {
    const double center = 0.5 * (a + b), half = 0.5 * (b - a);
    Eigen::MatrixXcd y0 = X;
    Eigen::MatrixXcd y1 = (H.matrix() * X - center * X) / half;
    for (int i = 2; i <= deg; ++i) {
        Eigen::MatrixXcd y2 = 2.0 * (H.matrix() * y1 - center * y1) / half - y0;
        y0.swap(y1);
        y1.swap(y2);
    }
    return y1;
}

Eigen::MatrixXcd thin_orth(const Eigen::MatrixXcd& X) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(X);
    return qr.householderQ() * Eigen::MatrixXcd::Identity(X.rows(), X.cols());
}

}  // namespace

BottomPairs bottom_eigenpairs(const LinearMap& H, int k, double tol, int max_rounds,
                              std::uint64_t seed) {
    if (H.l_in() != H.l_out()) throw std::invalid_argument("bottom_eigenpairs: map is not square");
    const index_t n = H.cols();
    if (k < 1 || k > n) throw std::invalid_argument("bottom_eigenpairs: bad k");

    const int m = int(std::min<index_t>(n, k + std::max(6, k)));
    if (n <= 2 * m || n <= 64) {
        // small enough for the dense route
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H.dense());
        BottomPairs out;
        out.values = es.eigenvalues().head(k);
        out.vectors = es.eigenvectors().leftCols(k);
        out.max_residual = 0.0;
        return out;
    }

    const double b = std::max(H.op_norm_est(), 1e-12);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    Eigen::MatrixXcd X(n, m);
    for (index_t i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) X(i, j) = cplx(g(rng), g(rng));
    X = thin_orth(X);

    double a = 0.2 * b;
    Eigen::VectorXd theta;
    Eigen::VectorXd resid = Eigen::VectorXd::Constant(m, b);
    BottomPairs out;
    for (int round = 1; round <= max_rounds; ++round) {
        X = thin_orth(cheb_filter(H, X, a, b, 40));
        Eigen::MatrixXcd HX = H.matrix() * X;
        Eigen::MatrixXcd A = X.adjoint() * HX;
        A = 0.5 * (A + A.adjoint()).eval();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A);
        X = (X * es.eigenvectors()).eval();
        HX = (HX * es.eigenvectors()).eval();
        theta = es.eigenvalues();
        for (int j = 0; j < m; ++j) resid(j) = (HX.col(j) - theta(j) * X.col(j)).norm();
        out.rounds = round;
        if (resid.head(k).maxCoeff() < tol * b) break;
        // keep the filter window just above the current block
        a = std::clamp(theta(m - 1), 1e-4 * b, 0.9 * b);
    }
    out.values = theta.head(k);
    out.vectors = X.leftCols(k);
    out.max_residual = resid.head(k).maxCoeff();
    if (out.max_residual > 1e3 * tol * b)
        throw std::runtime_error("bottom_eigenpairs: subspace iteration did not converge");
    return out;
}

SpectrumReport full_spectrum(const HamiltonianSpec& hs, index_t dense_cap) {
    if (hs.H.cols() > dense_cap)
        throw std::invalid_argument("full_spectrum: dimension above dense cap");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hs.H.dense(),
                                                       Eigen::EigenvaluesOnly);
    SpectrumReport r;
    r.spec = hs.spec;
    r.eigenvalues = es.eigenvalues();
    r.zero_threshold = zero_cut_for(hs.H);
    r.zero_multiplicity =
        int((r.eigenvalues.array() < r.zero_threshold).count());
    return r;
}

int zero_multiplicity(const LinearMap& H, index_t dense_cap) {
    const double cut = zero_cut_for(H);
    if (H.cols() <= dense_cap) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H.dense(), Eigen::EigenvaluesOnly);
        return int((es.eigenvalues().array() < cut).count());
    }
    const int k = 4;
    BottomPairs bp = bottom_eigenpairs(H, k);
    int count = int((bp.values.array() < cut).count());
    if (count == k)
        throw std::runtime_error("zero_multiplicity: kernel larger than probe block");
    return count;
}

GroundState zero_energy_state(int ell, int L, index_t dense_cap) {
    GroundState g;
    g.spec = SuperchargeSpec::make(ell, L, 0.0);
    if (L == 1) {
        g.vec = StateVector::basis(ell, std::vector<int>{0});
        g.energy = 0.0;
        g.q_residual = global_supercharge(g.spec).apply(g.vec).norm();
        g.qdag_residual = 0.0;
        return g;
    }
    const auto hs = assemble(g.spec);
    const double cut = zero_cut_for(hs.H);
    Eigen::VectorXcd psi;
    double e0, e1;
    if (hs.H.cols() <= dense_cap) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hs.H.dense());
        e0 = es.eigenvalues()(0);
        e1 = es.eigenvalues()(1);
        psi = es.eigenvectors().col(0);
    } else {
        BottomPairs bp = bottom_eigenpairs(hs.H, 2);
        e0 = bp.values(0);
        e1 = bp.values(1);
        psi = bp.vectors.col(0);
    }
    if (!(e0 < cut) || e1 < cut)
        throw std::runtime_error("zero_energy_state: kernel is not one-dimensional");
    psi /= psi.norm();
    const index_t pos = flat_of(alternating_digits(ell, L), ell);
    const cplx c = psi(pos);
    if (std::abs(c) < 1e-8)
        throw std::runtime_error("zero_energy_state: distinguished component vanishes");
    psi *= std::conj(c) / std::abs(c);
    g.vec = StateVector(ell, L, std::move(psi));
    g.energy = e0;
    g.q_residual = global_supercharge(g.spec).apply(g.vec).norm();
    SuperchargeSpec lower = g.spec;
    lower.length = L - 1;
    g.qdag_residual = global_supercharge(lower).adjoint().apply(g.vec).norm();
    return g;
}

DoubletReport doublet_match(const Eigen::VectorXd& lower, const Eigen::VectorXd& higher, double tol,
                            double zero_cut) {
    DoubletReport r;
    std::vector<bool> used(higher.size(), false);
    for (index_t i = 0; i < lower.size(); ++i) {
        if (lower(i) < zero_cut) continue;
        bool found = false;
        for (index_t j = 0; j < higher.size(); ++j) {
            if (used[j] || std::abs(higher(j) - lower(i)) > tol) continue;
            used[j] = true;
            r.matched.emplace_back(lower(i), higher(j));
            found = true;
            break;
        }
        if (!found) r.unmatched.push_back(lower(i));
    }
    r.all_matched = r.unmatched.empty();
    return r;
}

ScalingFit conformal_fit(const std::vector<std::pair<int, double>>& series, double v_fermi,
                         double central_charge) {
    if (series.size() < 4) throw std::invalid_argument("conformal_fit: need at least 4 lengths");
    const int n = int(series.size());
    Eigen::MatrixXd A(n, 3);
    Eigen::VectorXd y(n);
    for (int i = 0; i < n; ++i) {
        const double L = series[i].first;
        A(i, 0) = L;
        A(i, 1) = 1.0;
        A(i, 2) = 1.0 / L;
        y(i) = series[i].second;
    }
    Eigen::VectorXd sol = A.colPivHouseholderQr().solve(y);
    ScalingFit f;
    f.e_bulk = sol(0);
    f.e_boundary = sol(1);
    f.amplitude = sol(2);
    f.h = sol(2) / (M_PI * v_fermi) + central_charge / 24.0;
    f.rms = (A * sol - y).norm() / std::sqrt(double(n));
    return f;
}

double weight_extrapolation(const std::vector<std::pair<int, double>>& series, double v_fermi,
                            double central_charge) {
    if (series.size() < 2)
        throw std::invalid_argument("weight_extrapolation: need at least 2 lengths");
    const auto h_at = [&](const std::pair<int, double>& p) {
        return p.second * p.first / (M_PI * v_fermi) + central_charge / 24.0;
    };
    const auto& p1 = series[series.size() - 2];
    const auto& p2 = series[series.size() - 1];
    if (p1.first >= p2.first)
        throw std::invalid_argument("weight_extrapolation: lengths must increase");
    return (p2.first * h_at(p2) - p1.first * h_at(p1)) / double(p2.first - p1.first);
}

}  // namespace susyxxz
