// Scalar layer: q-deformed brackets at the root of unity q = exp(i*pi/(ell+2)),
// coefficient tables for the supercharges, the distinguished vectors chi / phi / xi,
// the xi overlap matrix with its closed-form inverse, and the exact integer
// sequences with their asymptotics.
#pragma once

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>

namespace susyxxz {

using cplx = std::complex<double>;

// Semantic version of the library, embedded in every CLI output header.
const char* library_version();

// Chain parameters for local spin ell/2. The local space V has dimension ell+1.
struct SpinParams {
    int ell;
    int dim;  // ell + 1
    cplx q;   // exp(i*pi/(ell+2))

    explicit SpinParams(int ell_);
};

// Deformed integer {m} = sin(m*pi/(ell+2)) / sin(pi/(ell+2)).
// Real by construction; {0} = 0, {1} = 1, {ell+2} = 0.
double qnum(const SpinParams& p, int m);

// Splitting amplitude a_{m,k} = sqrt({m+1} / ({m-k}{k+1})), defined for
// 0 <= k < m <= ell. Out-of-range pairs are rejected.
double amk(const SpinParams& p, int m, int k);

// q^(2(k+1)) * y, the rotated deformation parameter attached to label k.
cplx rotate_y(const SpinParams& p, cplx y, int k);

// Normalization x = 1 / sqrt(1 + |y|^(2(ell+2))).
double deformation_scale(const SpinParams& p, cplx y);

// chi: vector on V x V supported on |m, ell-m>, amplitude 1/{m+1}.
// Flat index convention: site 1 is the most significant digit.
Eigen::VectorXcd chi_vector(const SpinParams& p);

// phi(y): vector on V with phi_m = -y^(m+1)/sqrt({m+1}).
Eigen::VectorXcd phi_vector(const SpinParams& p, cplx y);

// xi_k(y) = x * (phi(y) - phi(q^(2(k+1)) y)) for k = 0..ell+1.
// k = ell+1 gives the zero vector.
Eigen::VectorXcd xi_vector(const SpinParams& p, cplx y, int k);

// Overlap matrix Xi_{mn} = <m|xi_n(y)>, n = 0..ell, together with its
// closed-form inverse. Requires y != 0 (the xi vectors degenerate at y = 0).
struct XiBasis {
    Eigen::MatrixXcd xi;
    Eigen::MatrixXcd xi_inv;
};
XiBasis xi_matrix(const SpinParams& p, cplx y);

// Exact integer sequences (arguments n >= 1):
//   seq_av(n)  = A_V(2n+1), vertically symmetric ASM count, odd sizes
//   seq_n8(n)  = N_8(2n), cyclically symmetric transpose complement count
// Values are exact big integers; log variants evaluate ln of the same value
// through lgamma sums and stay usable far beyond big-integer comfort.
mpz_class seq_av(int n);
mpz_class seq_n8(int n);
double log_seq_av(int n);
double log_seq_n8(int n);

// Leading asymptotic constants (C1, C2) for the normalized ground-state
// components; C1*C2 = (2/sqrt(3))^(3/2).
std::pair<double, double> asymptotic_constants();

}  // namespace susyxxz
