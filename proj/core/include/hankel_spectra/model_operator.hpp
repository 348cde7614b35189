#pragma once

#include <vector>

#include "hankel_spectra/dense_matrix.hpp"
#include "hankel_spectra/measure.hpp"

namespace hankel_spectra {

// Symmetrized model operator of an atomic measure: the matrix
//   M_ij = sqrt(w_i w_j) / (x_i + x_j)
// acting on R^N, with cyclic vector u_i = sqrt(w_i). This is G_mu written in
// the orthonormal basis of L^2(mu); u represents the constant function 1 and
// theta represents 1/x.
class ModelOperator {
 public:
  static ModelOperator build(const AtomicMeasure& mu);

  std::size_t size() const { return nodes_.size(); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& cyclic_vector() const { return cyclic_; }
  const std::vector<double>& theta_vector() const { return theta_; }
  const DenseMatrix& matrix() const { return matrix_; }

  // max_ij |x_i M_ij + M_ij x_j - u_i u_j|; zero in exact arithmetic.
  double lyapunov_residual() const;
  double trace() const;         // = 1/2 sum w_k / x_k
  double frobenius_sq() const;  // = sum_ij w_i w_j / (x_i + x_j)^2

 private:
  std::vector<double> nodes_, weights_, cyclic_, theta_;
  DenseMatrix matrix_;
};

}  // namespace hankel_spectra
