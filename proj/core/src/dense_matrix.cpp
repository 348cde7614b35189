#include "hankel_spectra/dense_matrix.hpp"

#include <cmath>

namespace hankel_spectra {

double DenseMatrix::max_abs_diff(const DenseMatrix& other) const {
  double worst = 0.0;
  for (std::size_t k = 0; k < data_.size(); ++k) {
    worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
  }
  return worst;
}

double DenseMatrix::column_orthogonality_residual() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < cols_; ++i) {
    for (std::size_t j = i; j < cols_; ++j) {
      double dot = 0.0;
      for (std::size_t r = 0; r < rows_; ++r) dot += (*this)(r, i) * (*this)(r, j);
      const double target = (i == j) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(dot - target));
    }
  }
  return worst;
}

}  // namespace hankel_spectra
