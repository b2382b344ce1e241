#include "susyxxz/cohomology.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SVD>

namespace susyxxz {

namespace {

// least-squares solve A x ~ r and return the attained residual norm
double certificate_residual(const LinearMap::Sparse& a, const Eigen::VectorXcd& r) {
    Eigen::LeastSquaresConjugateGradient<LinearMap::Sparse> solver;
    solver.setTolerance(1e-14);
    solver.setMaxIterations(20 * a.cols());
    solver.compute(a);
    Eigen::VectorXcd phi = solver.solve(r);
    return (a * phi - r).norm();
}

}  // namespace

RankResult numerical_rank(const LinearMap& a) {
    RankResult out;
    if (a.nnz() == 0) return out;
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(a.dense());
    const auto& sv = svd.singularValues();
    out.sigma_max = sv(0);
    if (out.sigma_max == 0.0) return out;
    for (index_t i = 0; i < sv.size(); ++i) {
        const double rel = sv(i) / out.sigma_max;
        if (rel > 1e-9) ++out.rank;
        if (rel >= 1e-11 && rel <= 1e-7) out.indeterminate = true;
    }
    return out;
}

CohomologyReport betti_numbers(const SuperchargeSpec& spec, int l_max) {
    if (l_max < 1) throw std::invalid_argument("betti_numbers: l_max must be positive");
    CohomologyReport rep;
    rep.spec = spec;
    rep.spec.length = l_max;
    const SpinParams p(spec.ell);
    const Eigen::VectorXcd seed =
        xi_vector(p, spec.y, spec.j) - xi_vector(p, spec.y, spec.k);
    index_t incoming = seed.norm() > 1e-12 ? 1 : 0;
    bool incoming_flag = false;
    for (int L = 1; L <= l_max; ++L) {
        SuperchargeSpec s = spec;
        s.length = L;
        RankResult r = numerical_rank(global_supercharge(s));
        BettiRow row;
        row.length = L;
        row.dim_kernel = pow_dim(spec.ell, L) - r.rank;
        row.incoming_rank = incoming;
        row.betti = row.dim_kernel - row.incoming_rank;
        row.indeterminate = r.indeterminate || incoming_flag;
        rep.table.push_back(row);
        rep.euler += (L % 2 == 0 ? row.betti : -row.betti);
        incoming = r.rank;
        incoming_flag = r.indeterminate;
    }
    return rep;
}

StateVector representative(const SpinParams& p, int L) {
    if (L < 1) throw std::invalid_argument("representative: L must be positive");
    const StateVector chi(p.ell, 2, chi_vector(p));
    StateVector rep =
        (L % 2 == 0) ? chi : StateVector::basis(p.ell, std::vector<int>{0});
    for (int len = rep.length; len < L; len += 2) rep = tensor(rep, chi);
    return rep;
}

LinearMap chi_append(const SpinParams& p, int L) {
    const Eigen::VectorXcd chi = chi_vector(p);
    const index_t n = pow_dim(p.ell, L);
    const index_t dd = index_t(p.dim) * p.dim;
    std::vector<LinearMap::Triplet> t;
    t.reserve(n * (p.ell + 1));
    for (index_t i = 0; i < n; ++i)
        for (index_t off = 0; off < dd; ++off)
            if (chi(off) != 0.0) t.emplace_back(i * dd + off, i, chi(off));
    return LinearMap::from_triplets(p.ell, L, L + 2, t);
}

Decomposition class_decomposition(const StateVector& psi, double tol) {
    const SpinParams p(psi.ell);
    const int L = psi.length;
    const LinearMap q_here = global_supercharge(SuperchargeSpec::make(p.ell, L, 0.0));
    if (q_here.apply(psi.amps).norm() > tol * std::max(1.0, psi.norm()))
        throw std::invalid_argument("class_decomposition: input is not a cocycle");
    Decomposition out;
    out.coefficient = psi.component(alternating_digits(p.ell, L));
    const Eigen::VectorXcd r = psi.amps - out.coefficient * representative(p, L).amps;
    if (L == 1) {
        out.residual = r.norm();
        return out;
    }
    const LinearMap q_in = global_supercharge(SuperchargeSpec::make(p.ell, L - 1, 0.0));
    out.residual = certificate_residual(q_in.matrix(), r);
    return out;
}

Decomposition homology_decomposition(const StateVector& psi, double tol) {
    const SpinParams p(psi.ell);
    const int L = psi.length;
    if (L > 1) {
        const LinearMap q_in = global_supercharge(SuperchargeSpec::make(p.ell, L - 1, 0.0));
        if (q_in.adjoint().apply(psi.amps).norm() > tol * std::max(1.0, psi.norm()))
            throw std::invalid_argument("homology_decomposition: input is not a cycle");
    }
    Decomposition out;
    out.coefficient = representative(p, L).amps.dot(psi.amps);
    Eigen::VectorXcd r = psi.amps;
    r(flat_of(alternating_digits(p.ell, L), p.ell)) -= out.coefficient;
    const LinearMap q_out = global_supercharge(SuperchargeSpec::make(p.ell, L, 0.0));
    out.residual = certificate_residual(q_out.adjoint().matrix(), r);
    return out;
}

}  // namespace susyxxz
