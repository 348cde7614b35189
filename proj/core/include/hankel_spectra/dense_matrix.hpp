#pragma once

#include <cstddef>
#include <vector>

namespace hankel_spectra {

// Row-major dense matrix. Small on purpose: the solvers in this library are
// hand-written and only need element access and raw row pointers.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  double* row(std::size_t i) { return data_.data() + i * cols_; }
  const double* row(std::size_t i) const { return data_.data() + i * cols_; }

  const std::vector<double>& data() const { return data_; }

  // max_ij |A_ij - B_ij|
  double max_abs_diff(const DenseMatrix& other) const;

  // max_ij |(A^T A - I)_ij|, treating columns as the vectors to test
  double column_orthogonality_residual() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace hankel_spectra
