// Flat indexing of the chain Hilbert space V^L, local dimension d = ell+1.
// Convention: site 1 is the most significant base-d digit, so appending a site
// on the right multiplies indices by d and prepending scales by d^L.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "susyxxz/qcore.hpp"

namespace susyxxz {

using index_t = std::int64_t;

// d^L with an overflow guard; L = 0 is allowed and gives 1.
index_t pow_dim(int ell, int L);

std::vector<int> digits_of(index_t flat, int ell, int L);
index_t flat_of(std::span<const int> digits, int ell);

// Dense amplitude vector on V^L.
struct StateVector {
    int ell = 1;
    int length = 1;
    Eigen::VectorXcd amps;

    StateVector() = default;
    StateVector(int ell_, int length_, Eigen::VectorXcd a);

    static StateVector zero(int ell, int L);
    static StateVector basis(int ell, std::span<const int> digits);

    index_t dim() const { return amps.size(); }
    double norm() const { return amps.norm(); }
    cplx component(std::span<const int> digits) const;
};

StateVector tensor(const StateVector& a, const StateVector& b);

// Digit string 0, ell, 0, ell, ... of length L (ends with 0 when L is odd).
std::vector<int> alternating_digits(int ell, int L);

}  // namespace susyxxz
