#pragma once

#include <vector>

#include "hankel_spectra/dense_matrix.hpp"

namespace hankel_spectra {

// Self-adjoint positive diagonal system (A, b, b): A = diag(a), input =
// output vector b. The balanced-realization picture of the model operator:
// a = nodes, b = sqrt(weights) makes the Gramian equal to the model matrix.
struct DiagonalSystem {
  std::vector<double> a;
  std::vector<double> b;
};

// Unique solution of A W + W A = <., b> b: W_ij = b_i b_j / (a_i + a_j).
DenseMatrix solve_lyapunov(const DiagonalSystem& sys);

// max_ij |a_i W_ij + W_ij a_j - b_i b_j|
double lyapunov_residual(const DiagonalSystem& sys, const DenseMatrix& w);

struct GramianResult {
  DenseMatrix w;
  // max_ij of the neglected tail b_i b_j e^{-T(a_i+a_j)}/(a_i+a_j)
  double tail_bound = 0.0;
  bool tail_ok = true;
};

// W = int_0^T <., e^{-tA}b> e^{-tA}b dt by composite Simpson; converges to
// solve_lyapunov as T and steps grow. tail_ok flags T too small against
// `tail_tol`.
GramianResult gramian_quadrature(const DiagonalSystem& sys, double T, int steps,
                                 double tail_tol = 1e-10);

// h(t) = <e^{-tA}b, b> = sum_i b_i^2 e^{-a_i t}; the kernel function of the
// atomic measure with positions a_i and weights b_i^2.
double impulse_response(const DiagonalSystem& sys, double t);

}  // namespace hankel_spectra
