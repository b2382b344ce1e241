// Sparse linear map between chain spaces V^{L_in} -> V^{L_out}. Supercharges
// change the length by one, Hamiltonians preserve it; keeping both lengths in
// the type catches shape mistakes at composition time.
#pragma once

#include <string>

#include <Eigen/Sparse>

#include "susyxxz/basis.hpp"

namespace susyxxz {

class LinearMap {
  public:
    using Sparse = Eigen::SparseMatrix<cplx>;
    using Triplet = Eigen::Triplet<cplx, index_t>;

    LinearMap() = default;
    LinearMap(int ell, int l_in, int l_out, Sparse m);
    static LinearMap from_triplets(int ell, int l_in, int l_out, const std::vector<Triplet>& t);
    static LinearMap identity(int ell, int L);

    int ell() const { return ell_; }
    int l_in() const { return l_in_; }
    int l_out() const { return l_out_; }
    index_t rows() const { return mat_.rows(); }
    index_t cols() const { return mat_.cols(); }
    index_t nnz() const { return mat_.nonZeros(); }
    const Sparse& matrix() const { return mat_; }

    LinearMap adjoint() const;
    LinearMap operator*(const LinearMap& rhs) const;  // composition this(rhs(.))
    LinearMap operator+(const LinearMap& rhs) const;
    LinearMap operator-(const LinearMap& rhs) const;
    LinearMap scaled(cplx s) const;

    StateVector apply(const StateVector& v) const;
    Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;

    Eigen::MatrixXcd dense() const;
    double max_abs() const;                    // entrywise max modulus
    double op_norm_est() const;                // max row sum, upper bound on the 2-norm
    double hermiticity_residual() const;       // max_abs(A - A^dag), square maps only

    // Serialization. Both formats carry (ell, L_in, L_out, nnz) in the header.
    void save_text(const std::string& path) const;
    void save_binary(const std::string& path) const;
    static LinearMap load_text(const std::string& path);
    static LinearMap load_binary(const std::string& path);

  private:
    int ell_ = 1;
    int l_in_ = 0;
    int l_out_ = 0;
    Sparse mat_;
};

double max_abs_diff(const LinearMap& a, const LinearMap& b);

}  // namespace susyxxz
