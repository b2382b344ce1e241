// Local supercharges on one site (length 1 -> 2), their deformations, the
// global nilpotent supercharge on the chain with boundary decorations, the
// symmetry operators, and the contracting homotopy used for y != 0.
#pragma once

#include "susyxxz/linear_map.hpp"

namespace susyxxz {

// q: V -> V x V, q|m> = sum_{k<m} a_{m,k} |k, m-k-1>.
LinearMap local_supercharge(const SpinParams& p);

// qbar = R q R: V -> V x V, qbar|m> = sum_{k>m} a_{ell-m, ell-k} |k, ell+1+m-k>.
LinearMap local_supercharge_bar(const SpinParams& p);

// Gauge term psi -> phi x psi + psi x phi for a fixed one-site vector phi.
LinearMap local_gauge_supercharge(const SpinParams& p, const Eigen::VectorXcd& phi);

// Deformed combination q(y) = x (q + y^(ell+2) qbar + gauge(phi(y))).
LinearMap local_supercharge_deformed(const SpinParams& p, cplx y);

// Parameters of a boundary-decorated global supercharge Q_{j,k}(y): V^L -> V^{L+1}.
// Labels j, k run over 0..ell+1; ell+1 means "no boundary insertion on that side"
// (the corresponding xi vector vanishes identically).
struct SuperchargeSpec {
    int ell = 1;
    int length = 1;  // input length L
    cplx y = 0.0;
    int j = 0;  // left label; defaults set below to ell+1 via make()
    int k = 0;  // right label

    static SuperchargeSpec make(int ell, int L, cplx y = 0.0, int j = -1, int k = -1);
};

// Q_{j,k}(y) psi = xi_j x psi + (-1)^(L-1) psi x xi_k + sum_{i=1..L} (-1)^i q(y)_i psi.
LinearMap global_supercharge(const SuperchargeSpec& s);

// Embeds a local map acting on local.l_in() consecutive sites starting at
// `site` (1-based) into a chain of length L.
LinearMap embed_local(const LinearMap& local, int site, int L);

// Prepend / append a fixed one-site vector: psi -> v x psi, psi -> psi x v.
LinearMap insert_left(const SpinParams& p, const Eigen::VectorXcd& v, int L);
LinearMap insert_right(const SpinParams& p, const Eigen::VectorXcd& v, int L);

// Symmetries on V^L: magnetisation (diagonal, eigenvalue ell*L/2 - sum m_i),
// site-reflection parity P, and spin reversal R (m_i -> ell - m_i).
LinearMap magnetisation(const SpinParams& p, int L);
LinearMap parity_op(const SpinParams& p, int L);
LinearMap spin_reversal(const SpinParams& p, int L);

// exp(i*theta*M) as a diagonal map; used for charge-covariance checks.
LinearMap magnetisation_phase(const SpinParams& p, int L, double theta);

// Contracting homotopy s_j: V^L -> V^{L-1} for y != 0: expand site 1 in the
// xi basis and keep the coefficient of xi_j. Label j = ell+1 is minus the sum
// of the others.
LinearMap homotopy_s(const SpinParams& p, cplx y, int j, int L);

}  // namespace susyxxz
