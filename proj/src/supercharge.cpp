#include "susyxxz/supercharge.hpp"

namespace susyxxz {

LinearMap local_supercharge(const SpinParams& p) {
    const int d = p.dim;
    std::vector<LinearMap::Triplet> t;
    for (int m = 1; m <= p.ell; ++m)
        for (int k = 0; k < m; ++k)
            t.emplace_back(index_t(k) * d + (m - k - 1), m, amk(p, m, k));
    return LinearMap::from_triplets(p.ell, 1, 2, t);
}

LinearMap local_supercharge_bar(const SpinParams& p) {
    const int d = p.dim;
    std::vector<LinearMap::Triplet> t;
    for (int m = 0; m < p.ell; ++m)
        for (int k = m + 1; k <= p.ell; ++k)
            t.emplace_back(index_t(k) * d + (p.ell + 1 + m - k), m, amk(p, p.ell - m, p.ell - k));
    return LinearMap::from_triplets(p.ell, 1, 2, t);
}

LinearMap local_gauge_supercharge(const SpinParams& p, const Eigen::VectorXcd& phi) {
    const int d = p.dim;
    if (phi.size() != d) throw std::invalid_argument("local_gauge_supercharge: phi size");
    std::vector<LinearMap::Triplet> t;
    for (int m = 0; m < d; ++m)
        for (int b = 0; b < d; ++b) {
            if (phi(b) == cplx(0.0)) continue;
            t.emplace_back(index_t(b) * d + m, m, phi(b));  // phi x psi
            t.emplace_back(index_t(m) * d + b, m, phi(b));  // psi x phi
        }
    return LinearMap::from_triplets(p.ell, 1, 2, t);
}

LinearMap local_supercharge_deformed(const SpinParams& p, cplx y) {
    const double x = deformation_scale(p, y);
    const cplx yl2 = std::pow(y, p.ell + 2);
    LinearMap m = local_supercharge(p) + local_supercharge_bar(p).scaled(yl2) +
                  local_gauge_supercharge(p, phi_vector(p, y));
    return m.scaled(x);
}

SuperchargeSpec SuperchargeSpec::make(int ell, int L, cplx y, int j, int k) {
    SuperchargeSpec s;
    s.ell = ell;
    s.length = L;
    s.y = y;
    s.j = (j < 0) ? ell + 1 : j;
    s.k = (k < 0) ? ell + 1 : k;
    if (L < 1) throw std::invalid_argument("SuperchargeSpec: L >= 1");
    if (s.j < 0 || s.j > ell + 1 || s.k < 0 || s.k > ell + 1)
        throw std::out_of_range("SuperchargeSpec: labels in 0..ell+1");
    return s;
}

LinearMap embed_local(const LinearMap& local, int site, int L) {
    const int a = local.l_in(), b = local.l_out();
    const int ell = local.ell();
    if (site < 1 || site + a - 1 > L) throw std::out_of_range("embed_local: site range");
    const index_t suffix = pow_dim(ell, L - site + 1 - a);
    const index_t mid_in = pow_dim(ell, a);
    const index_t dim_in = pow_dim(ell, L);
    std::vector<LinearMap::Triplet> t;
    t.reserve(std::size_t(dim_in / mid_in) * local.nnz());
    const auto& m = local.matrix();
    for (index_t in = 0; in < dim_in; ++in) {
        const index_t s = in % suffix;
        const index_t mid = (in / suffix) % mid_in;
        const index_t pre = in / (suffix * mid_in);
        for (LinearMap::Sparse::InnerIterator it(m, mid); it; ++it) {
            const index_t out = (pre * pow_dim(ell, b) + it.row()) * suffix + s;
            t.emplace_back(out, in, it.value());
        }
    }
    return LinearMap::from_triplets(ell, L, L - a + b, t);
}

LinearMap insert_left(const SpinParams& p, const Eigen::VectorXcd& v, int L) {
    const index_t dim = pow_dim(p.ell, L);
    std::vector<LinearMap::Triplet> t;
    for (int b = 0; b < p.dim; ++b) {
        if (v(b) == cplx(0.0)) continue;
        for (index_t in = 0; in < dim; ++in) t.emplace_back(index_t(b) * dim + in, in, v(b));
    }
    return LinearMap::from_triplets(p.ell, L, L + 1, t);
}

LinearMap insert_right(const SpinParams& p, const Eigen::VectorXcd& v, int L) {
    const index_t dim = pow_dim(p.ell, L);
    std::vector<LinearMap::Triplet> t;
    for (int b = 0; b < p.dim; ++b) {
        if (v(b) == cplx(0.0)) continue;
        for (index_t in = 0; in < dim; ++in) t.emplace_back(in * p.dim + b, in, v(b));
    }
    return LinearMap::from_triplets(p.ell, L, L + 1, t);
}

LinearMap global_supercharge(const SuperchargeSpec& s) {
    const SpinParams p(s.ell);
    const LinearMap qy = local_supercharge_deformed(p, s.y);
    const int L = s.length;
    LinearMap Q = embed_local(qy, 1, L).scaled(-1.0);
    for (int i = 2; i <= L; ++i) {
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        Q = Q + embed_local(qy, i, L).scaled(sign);
    }
    if (s.j <= p.ell) Q = Q + insert_left(p, xi_vector(p, s.y, s.j), L);
    if (s.k <= p.ell) {
        const double sign = (L % 2 == 1) ? 1.0 : -1.0;  // (-1)^(L-1)
        Q = Q + insert_right(p, xi_vector(p, s.y, s.k), L).scaled(sign);
    }
    return Q;
}

LinearMap magnetisation(const SpinParams& p, int L) {
    const index_t dim = pow_dim(p.ell, L);
    std::vector<LinearMap::Triplet> t;
    t.reserve(dim);
    for (index_t i = 0; i < dim; ++i) {
        int sum = 0;
        index_t f = i;
        for (int s = 0; s < L; ++s) {
            sum += int(f % p.dim);
            f /= p.dim;
        }
        t.emplace_back(i, i, 0.5 * p.ell * L - sum);
    }
    return LinearMap::from_triplets(p.ell, L, L, t);
}

LinearMap magnetisation_phase(const SpinParams& p, int L, double theta) {
    const index_t dim = pow_dim(p.ell, L);
    std::vector<LinearMap::Triplet> t;
    t.reserve(dim);
    for (index_t i = 0; i < dim; ++i) {
        int sum = 0;
        index_t f = i;
        for (int s = 0; s < L; ++s) {
            sum += int(f % p.dim);
            f /= p.dim;
        }
        t.emplace_back(i, i, std::polar(1.0, theta * (0.5 * p.ell * L - sum)));
    }
    return LinearMap::from_triplets(p.ell, L, L, t);
}

LinearMap parity_op(const SpinParams& p, int L) {
    const index_t dim = pow_dim(p.ell, L);
    std::vector<LinearMap::Triplet> t;
    t.reserve(dim);
    for (index_t i = 0; i < dim; ++i) {
        auto d = digits_of(i, p.ell, L);
        std::reverse(d.begin(), d.end());
        t.emplace_back(flat_of(d, p.ell), i, 1.0);
    }
    return LinearMap::from_triplets(p.ell, L, L, t);
}

LinearMap spin_reversal(const SpinParams& p, int L) {
    const index_t dim = pow_dim(p.ell, L);
    std::vector<LinearMap::Triplet> t;
    t.reserve(dim);
    for (index_t i = 0; i < dim; ++i) {
        auto d = digits_of(i, p.ell, L);
        for (int& m : d) m = p.ell - m;
        t.emplace_back(flat_of(d, p.ell), i, 1.0);
    }
    return LinearMap::from_triplets(p.ell, L, L, t);
}

LinearMap homotopy_s(const SpinParams& p, cplx y, int j, int L) {
    if (L < 1) throw std::invalid_argument("homotopy_s: L >= 1");
    if (j < 0 || j > p.ell + 1) throw std::out_of_range("homotopy_s: j in 0..ell+1");
    const XiBasis basis = xi_matrix(p, y);
    Eigen::RowVectorXcd w(p.dim);
    if (j <= p.ell) {
        w = basis.xi_inv.row(j);
    } else {
        w = -basis.xi_inv.colwise().sum();
    }
    const index_t rest = pow_dim(p.ell, L - 1);
    std::vector<LinearMap::Triplet> t;
    t.reserve(std::size_t(rest) * p.dim);
    for (int a = 0; a < p.dim; ++a)
        for (index_t r = 0; r < rest; ++r) t.emplace_back(r, index_t(a) * rest + r, w(a));
    return LinearMap::from_triplets(p.ell, L, L - 1, t);
}

}  // namespace susyxxz
