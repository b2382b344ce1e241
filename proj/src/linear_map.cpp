#include "susyxxz/linear_map.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>

namespace susyxxz {

LinearMap::LinearMap(int ell, int l_in, int l_out, Sparse m)
    : ell_(ell), l_in_(l_in), l_out_(l_out), mat_(std::move(m)) {
    if (mat_.rows() != pow_dim(ell_, l_out_) || mat_.cols() != pow_dim(ell_, l_in_))
        throw std::invalid_argument("LinearMap: matrix shape does not match lengths");
    mat_.makeCompressed();
}

LinearMap LinearMap::from_triplets(int ell, int l_in, int l_out, const std::vector<Triplet>& t) {
    Sparse m(pow_dim(ell, l_out), pow_dim(ell, l_in));
    m.setFromTriplets(t.begin(), t.end());
    return LinearMap(ell, l_in, l_out, std::move(m));
}

LinearMap LinearMap::identity(int ell, int L) {
    Sparse m(pow_dim(ell, L), pow_dim(ell, L));
    m.setIdentity();
    return LinearMap(ell, L, L, std::move(m));
}

LinearMap LinearMap::adjoint() const {
    return LinearMap(ell_, l_out_, l_in_, Sparse(mat_.adjoint()));
}

LinearMap LinearMap::operator*(const LinearMap& rhs) const {
    if (ell_ != rhs.ell_ || l_in_ != rhs.l_out_)
        throw std::invalid_argument("LinearMap: composition shape mismatch");
    return LinearMap(ell_, rhs.l_in_, l_out_, Sparse(mat_ * rhs.mat_));
}

LinearMap LinearMap::operator+(const LinearMap& rhs) const {
    if (ell_ != rhs.ell_ || l_in_ != rhs.l_in_ || l_out_ != rhs.l_out_)
        throw std::invalid_argument("LinearMap: addition shape mismatch");
    return LinearMap(ell_, l_in_, l_out_, Sparse(mat_ + rhs.mat_));
}

LinearMap LinearMap::operator-(const LinearMap& rhs) const {
    if (ell_ != rhs.ell_ || l_in_ != rhs.l_in_ || l_out_ != rhs.l_out_)
        throw std::invalid_argument("LinearMap: subtraction shape mismatch");
    return LinearMap(ell_, l_in_, l_out_, Sparse(mat_ - rhs.mat_));
}

LinearMap LinearMap::scaled(cplx s) const { return LinearMap(ell_, l_in_, l_out_, Sparse(s * mat_)); }

StateVector LinearMap::apply(const StateVector& v) const {
    if (v.ell != ell_ || v.length != l_in_)
        throw std::invalid_argument("LinearMap: vector shape mismatch");
    return StateVector(ell_, l_out_, mat_ * v.amps);
}

Eigen::VectorXcd LinearMap::apply(const Eigen::VectorXcd& v) const { return mat_ * v; }

Eigen::MatrixXcd LinearMap::dense() const { return Eigen::MatrixXcd(mat_); }

double LinearMap::max_abs() const {
    double m = 0.0;
    for (int k = 0; k < mat_.outerSize(); ++k)
        for (Sparse::InnerIterator it(mat_, k); it; ++it) m = std::max(m, std::abs(it.value()));
    return m;
}

double LinearMap::op_norm_est() const {
    Eigen::VectorXd row_sums = Eigen::VectorXd::Zero(mat_.rows());
    for (int k = 0; k < mat_.outerSize(); ++k)
        for (Sparse::InnerIterator it(mat_, k); it; ++it) row_sums(it.row()) += std::abs(it.value());
    return row_sums.size() ? row_sums.maxCoeff() : 0.0;
}

double LinearMap::hermiticity_residual() const {
    if (l_in_ != l_out_) throw std::invalid_argument("hermiticity_residual: map is not square");
    return max_abs_diff(*this, adjoint());
}

double max_abs_diff(const LinearMap& a, const LinearMap& b) { return (a - b).max_abs(); }

void LinearMap::save_text(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_text: cannot open " + path);
    out << "# susyxxz sparse map v1 ell=" << ell_ << " L_in=" << l_in_ << " L_out=" << l_out_
        << " nnz=" << nnz() << "\n";
    char line[128];
    for (int k = 0; k < mat_.outerSize(); ++k)
        for (Sparse::InnerIterator it(mat_, k); it; ++it) {
            std::snprintf(line, sizeof line, "%lld %lld %.17g %.17g\n", (long long)it.row(),
                          (long long)it.col(), it.value().real(), it.value().imag());
            out << line;
        }
    if (!out) throw std::runtime_error("save_text: write failed for " + path);
}

LinearMap LinearMap::load_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_text: cannot open " + path);
    std::string header;
    std::getline(in, header);
    int ell, lin, lout;
    long long nnz;
    if (std::sscanf(header.c_str(), "# susyxxz sparse map v1 ell=%d L_in=%d L_out=%d nnz=%lld",
                    &ell, &lin, &lout, &nnz) != 4)
        throw std::runtime_error("load_text: bad header in " + path);
    std::vector<Triplet> trip;
    trip.reserve(nnz);
    long long r, c;
    double re, im;
    while (in >> r >> c >> re >> im) trip.emplace_back(r, c, cplx(re, im));
    if ((long long)trip.size() != nnz) throw std::runtime_error("load_text: truncated " + path);
    return from_triplets(ell, lin, lout, trip);
}

namespace {
constexpr char kMagic[8] = {'S', 'X', 'X', 'Z', 'M', 'A', 'P', '1'};
}

void LinearMap::save_binary(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_binary: cannot open " + path);
    out.write(kMagic, 8);
    std::int32_t hdr[3] = {ell_, l_in_, l_out_};
    std::int64_t n = nnz();
    out.write(reinterpret_cast<const char*>(hdr), sizeof hdr);
    out.write(reinterpret_cast<const char*>(&n), sizeof n);
    for (int k = 0; k < mat_.outerSize(); ++k)
        for (Sparse::InnerIterator it(mat_, k); it; ++it) {
            std::int64_t rc[2] = {it.row(), it.col()};
            double v[2] = {it.value().real(), it.value().imag()};
            out.write(reinterpret_cast<const char*>(rc), sizeof rc);
            out.write(reinterpret_cast<const char*>(v), sizeof v);
        }
    if (!out) throw std::runtime_error("save_binary: write failed for " + path);
}

LinearMap LinearMap::load_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_binary: cannot open " + path);
    char magic[8];
    in.read(magic, 8);
    if (!in || std::memcmp(magic, kMagic, 8) != 0)
        throw std::runtime_error("load_binary: bad magic in " + path);
    std::int32_t hdr[3];
    std::int64_t n;
    in.read(reinterpret_cast<char*>(hdr), sizeof hdr);
    in.read(reinterpret_cast<char*>(&n), sizeof n);
    std::vector<Triplet> trip;
    trip.reserve(n);
    for (std::int64_t i = 0; i < n; ++i) {
        std::int64_t rc[2];
        double v[2];
        in.read(reinterpret_cast<char*>(rc), sizeof rc);
        in.read(reinterpret_cast<char*>(v), sizeof v);
        if (!in) throw std::runtime_error("load_binary: truncated " + path);
        trip.emplace_back(rc[0], rc[1], cplx(v[0], v[1]));
    }
    return from_triplets(hdr[0], hdr[1], hdr[2], trip);
}

}  // namespace susyxxz
