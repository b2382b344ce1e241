// Hamiltonian layer. Two independent construction routes are kept side by
// side: the explicit two-site density plus boundary terms, and the
// anticommutator of the global supercharge with its adjoint. Tests and the
// verification battery compare them entrywise.
#pragma once

#include "susyxxz/supercharge.hpp"

namespace susyxxz {

// Boundary diagonal coefficients c_m = sum_{k=1..m} ({k+1} - {k-1})/(2{k}),
// m = 0..ell+1 (index m).
std::vector<double> boundary_coefficients(const SpinParams& p);

// Hopping amplitude beta^n_{m1,m2} of the two-site density; n ranges over
// -min(m1, ell-m2) .. min(m2, ell-m1).
double density_beta(const SpinParams& p, int m1, int m2, int n);

// Two-site density from the closed-form amplitudes. Real symmetric.
LinearMap density_explicit(const SpinParams& p);

// Same operator assembled from the local supercharge algebra,
//   h = -(1 x qdag)(q x 1) - (qdag x 1)(1 x q) + q qdag + (qdag q x 1 + 1 x qdag q)/2
// evaluated with q = q(y); independent of y up to roundoff.
LinearMap density_from_supercharge(const SpinParams& p, cplx y);

// One-site boundary term h_B(q^(2(label+1)) y) = (1/2) q(.)^dag q(.).
// label = ell+1 gives the undecorated h_B(y); at y = 0 it is diag(c_m).
LinearMap boundary_term(const SpinParams& p, cplx y, int label);

struct HamiltonianSpec {
    SuperchargeSpec spec;
    LinearMap H;
};

// H = sum_i h_{i,i+1} + boundary(spec.j) at site 1 + boundary(spec.k) at site L.
// Requires L >= 2.
HamiltonianSpec assemble(const SuperchargeSpec& s);

// H = Q^dag Q + Q Q^dag with the decorated global supercharges; the incoming
// term is dropped at L = 1 where the shorter chain does not exist.
LinearMap anticommutator_hamiltonian(const SuperchargeSpec& s);

// Spin-1/2 XXZ chain at Delta = -1/2 with diagonal boundary fields and the
// standard energy shift; reference for the ell = 1 assembled Hamiltonian.
LinearMap pauli_reference(int L);

}  // namespace susyxxz
