// Identity battery: every algebraic relation the operator and Hamiltonian
// layers are built on, evaluated as scale-normalized residuals over a sweep of
// deformations, lengths, and boundary labels. The battery is the programmatic
// core of the command-line verify subcommand and of the acceptance gate; a
// deliberate coefficient corruption can be injected to prove it has teeth.
#pragma once

#include <cstdint>
#include <string>

#include "susyxxz/hamiltonian.hpp"

namespace susyxxz {

struct VerifyOptions {
    int ell = 1;
    int l_max = 4;     // largest input length probed by the chain-level identities
    int y_draws = 5;   // random deformations on top of y = 0, |y| = 1, and `y`
    cplx y = 0.0;      // always included in the sweep
    int j = -1;        // boundary labels; -1 means undecorated (ell + 1)
    int k = -1;
    double tol = 1e-11;  // residual gate, relative to each identity's scale
    // class-specific gates; 0 means inherit `tol`
    double tol_local = 0.0;        // one- and two-site operator algebra
    double tol_chain = 0.0;        // nilpotency, homotopy, intertwining
    double tol_hamiltonian = 0.0;  // construction route agreements
    std::uint64_t seed = 0x5eed;
    double corruption = 0.0;  // added to one amplitude of the local supercharge
};

struct IdentityResult {
    std::string name;
    double residual = 0.0;  // worst normalized residual over the sweep
    double tol = 0.0;
    bool pass = false;
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<IdentityResult> items;
    bool all_pass = false;
};

// Run the full battery. Identities that need y != 0 (homotopy, basis inverse,
// reversal covariance) skip the y = 0 point of the sweep; the spin-1/2 Pauli
// reference only runs at ell = 1.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace susyxxz
