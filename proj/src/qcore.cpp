#include "susyxxz/qcore.hpp"

#include <cmath>

namespace susyxxz {

const char* library_version() { return "1.0.0"; }

SpinParams::SpinParams(int ell_) : ell(ell_), dim(ell_ + 1) {
    if (ell < 1) throw std::invalid_argument("SpinParams: ell must be >= 1");
    q = std::polar(1.0, M_PI / (ell + 2));
}

double qnum(const SpinParams& p, int m) {
    const double s = M_PI / (p.ell + 2);
    return std::sin(m * s) / std::sin(s);
}

double amk(const SpinParams& p, int m, int k) {
    if (m < 1 || m > p.ell || k < 0 || k >= m)
        throw std::out_of_range("amk: need 0 <= k < m <= ell");
    return std::sqrt(qnum(p, m + 1) / (qnum(p, m - k) * qnum(p, k + 1)));
}

cplx rotate_y(const SpinParams& p, cplx y, int k) {
    return std::polar(1.0, 2.0 * M_PI * (k + 1) / (p.ell + 2)) * y;
}

double deformation_scale(const SpinParams& p, cplx y) {
    return 1.0 / std::sqrt(1.0 + std::pow(std::abs(y), 2.0 * (p.ell + 2)));
}

Eigen::VectorXcd chi_vector(const SpinParams& p) {
    const int d = p.dim;
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d * d);
    for (int m = 0; m <= p.ell; ++m)
        v(m * d + (p.ell - m)) = 1.0 / qnum(p, m + 1);
    return v;
}

Eigen::VectorXcd phi_vector(const SpinParams& p, cplx y) {
    Eigen::VectorXcd v(p.dim);
    cplx yp = 1.0;
    for (int m = 0; m <= p.ell; ++m) {
        yp *= y;  // y^(m+1)
        v(m) = -yp / std::sqrt(qnum(p, m + 1));
    }
    return v;
}

Eigen::VectorXcd xi_vector(const SpinParams& p, cplx y, int k) {
    if (k < 0 || k > p.ell + 1) throw std::out_of_range("xi_vector: k in 0..ell+1");
    const double x = deformation_scale(p, y);
    return x * (phi_vector(p, y) - phi_vector(p, rotate_y(p, y, k)));
}

XiBasis xi_matrix(const SpinParams& p, cplx y) {
    if (y == cplx(0.0)) throw std::invalid_argument("xi_matrix: y must be non-zero");
    const int d = p.dim;
    const double x = deformation_scale(p, y);
    XiBasis b;
    b.xi.resize(d, d);
    b.xi_inv.resize(d, d);
    // omega = q^2 is a primitive (ell+2)-th root of unity; the columns are
    // genuinely a basis because the inverse below is exact (discrete Fourier
    // orthogonality over the non-trivial powers of omega).
    for (int m = 0; m < d; ++m) {
        const cplx ym1 = std::pow(y, m + 1);
        const double rt = std::sqrt(qnum(p, m + 1));
        for (int n = 0; n < d; ++n) {
            const cplx w = std::polar(1.0, 2.0 * M_PI * double(m + 1) * double(n + 1) / (p.ell + 2));
            b.xi(m, n) = -x * ym1 * (1.0 - w) / rt;
            // row index m, column n of the inverse
            const cplx winv = std::polar(1.0, -2.0 * M_PI * double(m + 1) * double(n + 1) / (p.ell + 2));
            b.xi_inv(m, n) = std::sqrt(qnum(p, n + 1)) / (double(p.ell + 2) * x * std::pow(y, n + 1)) * winv;
        }
    }
    return b;
}

namespace {

// Exact product formulas, one factor per k; both sequences come out integer
// even though the intermediate factors are rationals.
mpz_class factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace

mpz_class seq_av(int n) {
    if (n < 1) throw std::out_of_range("seq_av: n >= 1");
    mpq_class prod = 1;
    for (int k = 1; k <= n; ++k) {
        mpq_class f(factorial(6 * k - 2) * factorial(2 * k - 1),
                    factorial(4 * k - 1) * factorial(4 * k - 2));
        f.canonicalize();
        prod *= f;
    }
    prod /= mpq_class(mpz_class(1) << n);
    prod.canonicalize();
    if (prod.get_den() != 1) throw std::logic_error("seq_av: non-integer result");
    return prod.get_num();
}

mpz_class seq_n8(int n) {
    if (n < 1) throw std::out_of_range("seq_n8: n >= 1");
    mpq_class prod = 1;
    for (int k = 0; k < n; ++k) {
        mpq_class f(mpz_class(3 * k + 1) * factorial(6 * k) * factorial(2 * k),
                    factorial(4 * k) * factorial(4 * k + 1));
        f.canonicalize();
        prod *= f;
    }
    prod.canonicalize();
    if (prod.get_den() != 1) throw std::logic_error("seq_n8: non-integer result");
    return prod.get_num();
}

double log_seq_av(int n) {
    if (n < 1) throw std::out_of_range("log_seq_av: n >= 1");
    double s = -n * std::log(2.0);
    for (int k = 1; k <= n; ++k)
        s += std::lgamma(6.0 * k - 1.0) + std::lgamma(2.0 * k) - std::lgamma(4.0 * k) -
             std::lgamma(4.0 * k - 1.0);
    return s;
}

double log_seq_n8(int n) {
    if (n < 1) throw std::out_of_range("log_seq_n8: n >= 1");
    double s = 0.0;
    for (int k = 0; k < n; ++k)
        s += std::log(3.0 * k + 1.0) + std::lgamma(6.0 * k + 1.0) + std::lgamma(2.0 * k + 1.0) -
             std::lgamma(4.0 * k + 1.0) - std::lgamma(4.0 * k + 2.0);
    return s;
}

std::pair<double, double> asymptotic_constants() {
    const double g13 = std::exp(std::lgamma(1.0 / 3.0));
    const double c1 = std::sqrt(g13) / std::pow(M_PI, 0.25);
    const double c2 = std::pow(2.0 / std::sqrt(3.0), 1.5) * std::pow(M_PI, 0.25) / std::sqrt(g13);
    return {c1, c2};
}

}  // namespace susyxxz
