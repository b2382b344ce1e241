// Numerical (co)homology of the supercharge complex: singular-value ranks with
// an explicit indeterminacy band, Betti numbers per length, the tensor-product
// class representatives, and least-squares decomposition certificates.
#pragma once

#include "susyxxz/supercharge.hpp"

namespace susyxxz {

struct RankResult {
    index_t rank = 0;
    double sigma_max = 0.0;
    // true when a singular value falls inside [1e-11, 1e-7] * sigma_max, too
    // close to the cutoff 1e-9 * sigma_max to trust the integer
    bool indeterminate = false;
};

RankResult numerical_rank(const LinearMap& a);

struct BettiRow {
    int length = 0;
    index_t dim_kernel = 0;     // dim ker(Q: V^L -> V^{L+1})
    // rank(Q: V^{L-1} -> V^L); at L = 1 the incoming map sends the scalar line
    // to xi_j - xi_k, so the rank is 1 unless that vector vanishes (y = 0 or
    // j = k), which is exactly what keeps the deformed chain free of classes
    index_t incoming_rank = 0;
    index_t betti = 0;  // dim_kernel - incoming_rank
    bool indeterminate = false;
};

struct CohomologyReport {
    SuperchargeSpec spec;  // length holds L_max
    std::vector<BettiRow> table;
    double rank_cutoff = 1e-9;  // relative singular-value cutoff
    // alternating sum over the truncated table; informational only, the
    // truncation at L_max makes it window-dependent
    index_t euler = 0;
};

CohomologyReport betti_numbers(const SuperchargeSpec& spec, int l_max);

// Cohomology class representative: |chi>^{n} for L = 2n, |0> x |chi>^{n-1} for
// L = 2n-1, unnormalized; its alternating component equals 1.
StateVector representative(const SpinParams& p, int L);

// Right-append the two-site chi state, V^L -> V^{L+2}; commutes with the
// undecorated supercharge and realizes betti(L+2) = betti(L).
LinearMap chi_append(const SpinParams& p, int L);

struct Decomposition {
    cplx coefficient;       // class coefficient relative to the representative
    double residual = 0.0;  // least-squares certificate |psi - coeff*rep - d(phi)|
};

// Writes a cocycle as coefficient * representative + Q(phi); the coefficient is
// the alternating component of psi. Rejects psi with |Q psi| > tol * |psi|.
Decomposition class_decomposition(const StateVector& psi, double tol = 1e-8);

// Writes a Q^dag-cycle as coefficient * |0 l 0 l ...> + Q^dag(phi) with the
// coefficient <representative|psi>. Rejects psi with |Q^dag psi| > tol * |psi|.
Decomposition homology_decomposition(const StateVector& psi, double tol = 1e-8);

}  // namespace susyxxz
