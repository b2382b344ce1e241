#include "susyxxz/hamiltonian.hpp"

namespace susyxxz {

std::vector<double> boundary_coefficients(const SpinParams& p) {
    std::vector<double> c(p.ell + 2, 0.0);
    for (int m = 1; m <= p.ell + 1; ++m)
        c[m] = c[m - 1] + (qnum(p, m + 1) - qnum(p, m - 1)) / (2.0 * qnum(p, m));
    return c;
}

double density_beta(const SpinParams& p, int m1, int m2, int n) {
    const int M1 = std::min(m1, p.ell - m2);
    const int M2 = std::min(m2, p.ell - m1);
    if (n < -M1 || n > M2) throw std::out_of_range("density_beta: n outside -M1..M2");
    if (n == 0) {
        const auto c = boundary_coefficients(p);
        return c[M1 + 1] + c[M2 + 1];
    }
    if (n < 0) return density_beta(p, m2, m1, -n);
    return -1.0 / qnum(p, n) *
           std::sqrt(qnum(p, M1 + 1) * qnum(p, M2 - n + 1) / (qnum(p, M2 + 1) * qnum(p, M1 + n + 1)));
}

LinearMap density_explicit(const SpinParams& p) {
    const int d = p.dim;
    std::vector<LinearMap::Triplet> t;
    for (int m1 = 0; m1 <= p.ell; ++m1)
        for (int m2 = 0; m2 <= p.ell; ++m2) {
            const int M1 = std::min(m1, p.ell - m2);
            const int M2 = std::min(m2, p.ell - m1);
            for (int n = -M1; n <= M2; ++n)
                t.emplace_back(index_t(m1 + n) * d + (m2 - n), index_t(m1) * d + m2,
                               density_beta(p, m1, m2, n));
        }
    return LinearMap::from_triplets(p.ell, 2, 2, t);
}

LinearMap density_from_supercharge(const SpinParams& p, cplx y) {
    const LinearMap q = local_supercharge_deformed(p, y);
    const LinearMap qd = q.adjoint();
    const LinearMap qdq = qd * q;  // on V
    return (embed_local(qd, 2, 3) * embed_local(q, 1, 2)).scaled(-1.0) -
           embed_local(qd, 1, 3) * embed_local(q, 2, 2) + q * qd +
           (embed_local(qdq, 1, 2) + embed_local(qdq, 2, 2)).scaled(0.5);
}

LinearMap boundary_term(const SpinParams& p, cplx y, int label) {
    if (label < 0 || label > p.ell + 1) throw std::out_of_range("boundary_term: label in 0..ell+1");
    const LinearMap q = local_supercharge_deformed(p, rotate_y(p, y, label));
    return (q.adjoint() * q).scaled(0.5);
}

HamiltonianSpec assemble(const SuperchargeSpec& s) {
    if (s.length < 2) throw std::invalid_argument("assemble: L >= 2");
    const SpinParams p(s.ell);
    const LinearMap h = density_explicit(p);
    LinearMap H = embed_local(h, 1, s.length);
    for (int i = 2; i < s.length; ++i) H = H + embed_local(h, i, s.length);
    H = H + embed_local(boundary_term(p, s.y, s.j), 1, s.length) +
        embed_local(boundary_term(p, s.y, s.k), s.length, s.length);
    return HamiltonianSpec{s, std::move(H)};
}

LinearMap anticommutator_hamiltonian(const SuperchargeSpec& s) {
    const LinearMap up = global_supercharge(s);
    LinearMap H = up.adjoint() * up;
    if (s.length >= 2) {
        SuperchargeSpec lower = s;
        lower.length = s.length - 1;
        const LinearMap dn = global_supercharge(lower);
        H = H + dn * dn.adjoint();
    }
    return H;
}

LinearMap pauli_reference(int L) {
    if (L < 2) throw std::invalid_argument("pauli_reference: L >= 2");
    const SpinParams p(1);
    Eigen::Matrix2cd sx, sy, sz;
    sx << 0, 1, 1, 0;
    sy << 0, cplx(0, -1), cplx(0, 1), 0;
    sz << 1, 0, 0, -1;
    auto kron2 = [](const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
        Eigen::Matrix4cd k;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) k.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        return k;
    };
    Eigen::Matrix4cd bond = -0.5 * (kron2(sx, sx) + kron2(sy, sy) - 0.5 * kron2(sz, sz));
    auto to_map = [&](const Eigen::MatrixXcd& m, int sites) {
        std::vector<LinearMap::Triplet> t;
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c)
                if (m(r, c) != cplx(0.0)) t.emplace_back(r, c, m(r, c));
        return LinearMap::from_triplets(1, sites, sites, t);
    };
    LinearMap H = embed_local(to_map(bond, 2), 1, L);
    for (int i = 2; i < L; ++i) H = H + embed_local(to_map(bond, 2), i, L);
    H = H + embed_local(to_map(-0.25 * sz, 1), 1, L) + embed_local(to_map(-0.25 * sz, 1), L, L);
    std::vector<LinearMap::Triplet> shift;
    for (index_t i = 0; i < pow_dim(1, L); ++i) shift.emplace_back(i, i, (3.0 * L - 1.0) / 4.0);
    return H + LinearMap::from_triplets(1, L, L, shift);
}

}  // namespace susyxxz
