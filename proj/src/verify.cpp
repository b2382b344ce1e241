#include "susyxxz/verify.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace susyxxz {

namespace {

// Worst residual per identity, in fixed registration order.
class Collector {
  public:
    void add(const std::string& name, double tol) {
        items_.push_back({name, 0.0, tol, true});
    }

    void note(const std::string& name, double residual) {
        for (auto& it : items_) {
            if (it.name == name) {
                it.residual = std::max(it.residual, residual);
                return;
            }
        }
        throw std::logic_error("unregistered identity: " + name);
    }

    std::vector<IdentityResult> finish() {
        for (auto& it : items_) it.pass = it.residual < it.tol;
        return std::move(items_);
    }

  private:
    std::vector<IdentityResult> items_;
};

double over(double raw, double scale) { return raw / std::max(1.0, scale); }

}  // namespace

VerifyReport run_verify(const VerifyOptions& opt) {
    SpinParams p(opt.ell);
    if (opt.l_max < 2) throw std::invalid_argument("l_max must be at least 2");
    if (opt.y_draws < 0) throw std::invalid_argument("y_draws must be nonnegative");
    if (!(opt.tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (opt.tol_local < 0.0 || opt.tol_chain < 0.0 || opt.tol_hamiltonian < 0.0)
        throw std::invalid_argument("class tolerances must be nonnegative");
    const double tol_local = (opt.tol_local > 0.0) ? opt.tol_local : opt.tol;
    const double tol_chain = (opt.tol_chain > 0.0) ? opt.tol_chain : opt.tol;
    const double tol_ham = (opt.tol_hamiltonian > 0.0) ? opt.tol_hamiltonian : opt.tol;

    // Normalizes the boundary labels (and rejects out-of-range ones) up front.
    const SuperchargeSpec probe = SuperchargeSpec::make(opt.ell, 2, opt.y, opt.j, opt.k);
    const int jlab = probe.j, klab = probe.k;

    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> mag(0.25, 1.5);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
    std::normal_distribution<double> gauss(0.0, 1.0);

    // Deformation sweep: the degenerate point, the unit circle, the configured
    // value, then seeded random draws.
    std::vector<cplx> ys{cplx(0.0), std::polar(1.0, 0.9)};
    auto push_y = [&ys](cplx y) {
        for (cplx seen : ys)
            if (seen == y) return;
        ys.push_back(y);
    };
    push_y(opt.y);
    for (int t = 0; t < opt.y_draws; ++t) push_y(std::polar(mag(rng), ang(rng)));

    // The corruption hook adds a spurious amplitude to the deformed local
    // supercharge wherever the battery builds one, so a nonzero value must
    // trip coassociativity (and the other identities that see the operator).
    auto deformed = [&](cplx y) {
        LinearMap qy = local_supercharge_deformed(p, y);
        if (opt.corruption != 0.0) {
            std::vector<LinearMap::Triplet> t{{0, 1, cplx(opt.corruption)}};
            qy = qy + LinearMap::from_triplets(p.ell, 1, 2, t);
        }
        return qy;
    };

    Collector c;
    c.add("coassociativity", tol_local);
    c.add("gauge quasi-coassociativity", tol_local);
    c.add("chi anticommutation", tol_local);
    c.add("mixed product relations", tol_local);
    c.add("phi functional equation", tol_local);
    c.add("xi fixed point", tol_local);
    c.add("xi basis inverse", tol_local);
    c.add("parity covariance", tol_local);
    c.add("spin reversal covariance", tol_local);
    c.add("charge covariance", tol_local);
    c.add("global nilpotency", tol_chain);
    c.add("homotopy inversion", tol_chain);
    c.add("density route agreement", tol_ham);
    c.add("hamiltonian route agreement", tol_ham);
    if (opt.l_max >= 3) c.add("supercharge intertwines the chain", tol_chain);
    if (p.ell == 1) c.add("pauli reference match", tol_ham);

    // Deformation-independent relations between the two undeformed charges.
    {
        const LinearMap q = local_supercharge(p), qb = local_supercharge_bar(p);
        const LinearMap qd = q.adjoint(), qbd = qb.adjoint();
        const double qscale = q.max_abs() * qb.max_abs();

        const LinearMap anti = (embed_local(qb, 2, 2) - embed_local(qb, 1, 2)) * q +
                               (embed_local(q, 2, 2) - embed_local(q, 1, 2)) * qb;
        const StateVector chi(p.ell, 2, chi_vector(p));
        for (int m = 0; m <= p.ell; ++m) {
            const StateVector e = StateVector::basis(p.ell, std::vector<int>{m});
            const Eigen::VectorXcd want = tensor(chi, e).amps - tensor(e, chi).amps;
            const double raw = (anti.apply(e).amps - want).cwiseAbs().maxCoeff();
            c.note("chi anticommutation", over(raw, qscale));
        }

        double mixed = max_abs_diff(qb * qd, embed_local(qd, 2, 3) * embed_local(qb, 1, 2) +
                                                 embed_local(qd, 1, 3) * embed_local(qb, 2, 2));
        mixed = std::max(mixed, (qbd * q).max_abs());
        mixed = std::max(mixed,
                         max_abs_diff(q * qbd, embed_local(qbd, 2, 3) * embed_local(q, 1, 2) +
                                                   embed_local(qbd, 1, 3) * embed_local(q, 2, 2)));
        mixed = std::max(mixed, (qd * qb).max_abs());
        c.note("mixed product relations", over(mixed, qscale));
    }

    // Spin-1/2 cross-check against the textbook chain, undeformed and
    // undecorated; independent of the sweep.
    if (p.ell == 1) {
        for (int L = 2; L <= opt.l_max; ++L) {
            const LinearMap ref = pauli_reference(L);
            const double raw = max_abs_diff(assemble(SuperchargeSpec::make(1, L, 0.0)).H, ref);
            c.note("pauli reference match", over(raw, ref.op_norm_est()));
        }
    }

    const LinearMap density_ref = density_explicit(p);

    for (cplx y : ys) {
        const LinearMap qy = deformed(y);
        const double qy2 = qy.max_abs() * qy.max_abs();

        c.note("coassociativity",
               over(((embed_local(qy, 1, 2) - embed_local(qy, 2, 2)) * qy).max_abs(), qy2));

        {
            Eigen::VectorXcd phi(p.dim);
            for (int i = 0; i < p.dim; ++i) phi(i) = cplx(gauss(rng), gauss(rng));
            phi.normalize();
            const LinearMap qf = local_gauge_supercharge(p, phi);
            const LinearMap lhs = (embed_local(qf, 1, 2) - embed_local(qf, 2, 2)) * qf;
            const StateVector phi1(p.ell, 1, phi);
            const StateVector chi_phi = tensor(phi1, phi1);
            for (int m = 0; m <= p.ell; ++m) {
                const StateVector e = StateVector::basis(p.ell, std::vector<int>{m});
                const Eigen::VectorXcd want = tensor(chi_phi, e).amps - tensor(e, chi_phi).amps;
                c.note("gauge quasi-coassociativity",
                       (lhs.apply(e).amps - want).cwiseAbs().maxCoeff());
            }
        }

        {
            const cplx yl2 = std::pow(y, p.ell + 2);
            const StateVector phi(p.ell, 1, phi_vector(p, y));
            const LinearMap op = local_supercharge(p) + local_supercharge_bar(p).scaled(yl2);
            const Eigen::VectorXcd lhs = op.apply(phi).amps + tensor(phi, phi).amps;
            const Eigen::VectorXcd rhs = yl2 * chi_vector(p);
            c.note("phi functional equation",
                   over((lhs - rhs).cwiseAbs().maxCoeff(), std::abs(yl2)));
        }

        for (int k = 0; k <= p.ell + 1; ++k) {
            const StateVector xi(p.ell, 1, xi_vector(p, y, k));
            const double raw = (qy.apply(xi).amps - tensor(xi, xi).amps).cwiseAbs().maxCoeff();
            const double x = xi.amps.cwiseAbs().maxCoeff();
            c.note("xi fixed point", over(raw, x * x));
        }

        c.note("parity covariance",
               over(max_abs_diff(parity_op(p, 2) * qy, qy), qy.max_abs()));

        {
            const double theta = ang(rng);
            const LinearMap lhs =
                magnetisation_phase(p, 2, theta) * qy * magnetisation_phase(p, 1, -theta);
            const cplx phase = std::polar(1.0, theta * (p.ell + 2) / 2.0);
            const LinearMap rhs = deformed(std::polar(1.0, -theta) * y).scaled(phase);
            c.note("charge covariance", over(max_abs_diff(lhs, rhs), qy.max_abs()));
        }

        if (y != 0.0) {
            const LinearMap lhs = spin_reversal(p, 2) * qy * spin_reversal(p, 1);
            const cplx phase = std::pow(y / std::abs(y), p.ell + 2);
            const LinearMap rhs = deformed(1.0 / y).scaled(phase);
            c.note("spin reversal covariance", over(max_abs_diff(lhs, rhs), qy.max_abs()));

            const XiBasis b = xi_matrix(p, y);
            const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(p.dim, p.dim);
            const double raw = std::max((b.xi * b.xi_inv - eye).cwiseAbs().maxCoeff(),
                                        (b.xi_inv * b.xi - eye).cwiseAbs().maxCoeff());
            c.note("xi basis inverse",
                   over(raw, b.xi.cwiseAbs().maxCoeff() * b.xi_inv.cwiseAbs().maxCoeff()));
        }

        c.note("density route agreement",
               over(max_abs_diff(density_ref, density_from_supercharge(p, y)),
                    density_ref.op_norm_est()));

        // Chain-level identities; operators reach one site past l_max.
        std::vector<LinearMap> Q(opt.l_max + 1), B(opt.l_max + 1);
        for (int L = 1; L <= opt.l_max; ++L)
            Q[L] = global_supercharge(SuperchargeSpec::make(p.ell, L, y, jlab, klab));

        for (int L = 1; L + 1 <= opt.l_max; ++L) {
            const double scale = Q[L].op_norm_est() * Q[L + 1].op_norm_est();
            c.note("global nilpotency", over((Q[L + 1] * Q[L]).max_abs(), scale));
        }

        for (int L = 2; L <= opt.l_max; ++L) {
            const SuperchargeSpec s = SuperchargeSpec::make(p.ell, L, y, jlab, klab);
            B[L] = anticommutator_hamiltonian(s);
            c.note("hamiltonian route agreement",
                   over(max_abs_diff(assemble(s).H, B[L]), B[L].op_norm_est()));
        }

        for (int L = 2; L + 1 <= opt.l_max; ++L) {
            const double scale = B[L + 1].op_norm_est() * Q[L].op_norm_est();
            c.note("supercharge intertwines the chain",
                   over(max_abs_diff(B[L + 1] * Q[L], Q[L] * B[L]), scale));
        }

        if (y != 0.0) {
            for (int L = 2; L <= opt.l_max; ++L) {
                const LinearMap s_up = homotopy_s(p, y, jlab, L + 1);
                const LinearMap s_dn = homotopy_s(p, y, jlab, L);
                const LinearMap anti = s_up * Q[L] + Q[L - 1] * s_dn;
                const double scale = std::max(s_up.op_norm_est() * Q[L].op_norm_est(),
                                              Q[L - 1].op_norm_est() * s_dn.op_norm_est());
                c.note("homotopy inversion",
                       over(max_abs_diff(anti, LinearMap::identity(p.ell, L)), scale));
            }
        }
    }

    VerifyReport report;
    report.options = opt;
    report.items = c.finish();
    report.all_pass = true;
    for (const auto& it : report.items) report.all_pass = report.all_pass && it.pass;
    return report;
}

}  // namespace susyxxz
