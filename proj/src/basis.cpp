#include "susyxxz/basis.hpp"

namespace susyxxz {

index_t pow_dim(int ell, int L) {
    if (L < 0) throw std::invalid_argument("pow_dim: negative length");
    const index_t d = ell + 1;
    index_t r = 1;
    for (int i = 0; i < L; ++i) {
        if (r > (index_t(1) << 56) / d) throw std::overflow_error("pow_dim: dimension overflow");
        r *= d;
    }
    return r;
}

std::vector<int> digits_of(index_t flat, int ell, int L) {
    const index_t d = ell + 1;
    std::vector<int> out(L);
    for (int i = L - 1; i >= 0; --i) {
        out[i] = int(flat % d);
        flat /= d;
    }
    return out;
}

index_t flat_of(std::span<const int> digits, int ell) {
    const index_t d = ell + 1;
    index_t r = 0;
    for (int m : digits) {
        if (m < 0 || m > ell) throw std::out_of_range("flat_of: digit outside 0..ell");
        r = r * d + m;
    }
    return r;
}

StateVector::StateVector(int ell_, int length_, Eigen::VectorXcd a)
    : ell(ell_), length(length_), amps(std::move(a)) {
    if (amps.size() != pow_dim(ell, length))
        throw std::invalid_argument("StateVector: amplitude count does not match (ell, L)");
}

StateVector StateVector::zero(int ell, int L) {
    return StateVector(ell, L, Eigen::VectorXcd::Zero(pow_dim(ell, L)));
}

StateVector StateVector::basis(int ell, std::span<const int> digits) {
    StateVector v = zero(ell, int(digits.size()));
    v.amps(flat_of(digits, ell)) = 1.0;
    return v;
}

cplx StateVector::component(std::span<const int> digits) const {
    if (int(digits.size()) != length) throw std::invalid_argument("component: wrong digit count");
    return amps(flat_of(digits, ell));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    if (a.ell != b.ell) throw std::invalid_argument("tensor: mixed ell");
    StateVector out = StateVector::zero(a.ell, a.length + b.length);
    const index_t nb = b.dim();
    for (index_t i = 0; i < a.dim(); ++i) {
        if (a.amps(i) == cplx(0.0)) continue;
        out.amps.segment(i * nb, nb) = a.amps(i) * b.amps;
    }
    return out;
}

std::vector<int> alternating_digits(int ell, int L) {
    std::vector<int> d(L);
    for (int i = 0; i < L; ++i) d[i] = (i % 2 == 0) ? 0 : ell;
    return d;
}

}  // namespace susyxxz
