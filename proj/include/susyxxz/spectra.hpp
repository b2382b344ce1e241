// Spectral layer: dense diagonalization for small chains, a Chebyshev-filtered
// subspace iteration for the bottom of the spectrum on larger ones, zero-energy
// states with residual certificates, doublet matching across chain lengths, and
// the finite-size scaling fit.
#pragma once

#include "susyxxz/hamiltonian.hpp"

namespace susyxxz {

struct SpectrumReport {
    SuperchargeSpec spec;
    Eigen::VectorXd eigenvalues;  // ascending
    double zero_threshold = 0.0;
    int zero_multiplicity = 0;
};

// Dense spectrum; refuses dimensions above the cap (use bottom_eigenpairs there).
SpectrumReport full_spectrum(const HamiltonianSpec& hs, index_t dense_cap = 4096);

struct BottomPairs {
    Eigen::VectorXd values;    // k smallest, ascending
    Eigen::MatrixXcd vectors;  // matching columns
    double max_residual = 0.0;
    int rounds = 0;
};

// k lowest eigenpairs of a Hermitian positive semidefinite map.
BottomPairs bottom_eigenpairs(const LinearMap& H, int k, double tol = 1e-12, int max_rounds = 80,
                              std::uint64_t seed = 0x5eed);

// Number of eigenvalues below 1e-8 * max(1, row-sum norm); dense route below
// the cap, filtered subspace route above it.
int zero_multiplicity(const LinearMap& H, index_t dense_cap = 1024);

struct GroundState {
    SuperchargeSpec spec;
    StateVector vec;      // normalized, distinguished component real positive
    double energy = 0.0;
    double q_residual = 0.0;     // |Q psi|
    double qdag_residual = 0.0;  // |Q^dag psi|
};

// Unique zero-energy state of the undecorated chain (y = 0). L = 1 returns the
// lowest-weight site state. Throws if the kernel is not one-dimensional.
GroundState zero_energy_state(int ell, int L, index_t dense_cap = 1024);

struct DoubletReport {
    std::vector<std::pair<double, double>> matched;  // (E at L, partner at L+1)
    std::vector<double> unmatched;                   // positive E at L without partner
    bool all_matched = false;
};

// Pair every positive eigenvalue of the shorter chain with one of the longer
// chain within tol; eigenvalues below zero_cut are treated as zero modes.
DoubletReport doublet_match(const Eigen::VectorXd& lower, const Eigen::VectorXd& higher, double tol,
                            double zero_cut);

struct ScalingFit {
    double e_bulk = 0.0;
    double e_boundary = 0.0;
    double amplitude = 0.0;  // coefficient of 1/L
    double h = 0.0;          // amplitude/(pi v_F) + c/24
    double rms = 0.0;
};

// Least-squares fit of E(L) = e_bulk L + e_boundary + amplitude/L over the
// given series; needs at least four lengths.
ScalingFit conformal_fit(const std::vector<std::pair<int, double>>& series, double v_fermi,
                         double central_charge);

// Conformal weight from an energy series whose bulk and boundary terms vanish
// exactly (the case here, since E = 0 sits in every spectrum): converts each
// point to h(L) = E L/(pi v_F) + c/24 and removes the leading 1/L correction
// by Richardson extrapolation over the last two lengths.
double weight_extrapolation(const std::vector<std::pair<int, double>>& series, double v_fermi,
                            double central_charge);

}  // namespace susyxxz
