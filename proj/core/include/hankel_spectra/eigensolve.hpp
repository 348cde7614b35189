#pragma once

#include <span>
#include <vector>

#include "hankel_spectra/dense_matrix.hpp"
#include "hankel_spectra/model_operator.hpp"

namespace hankel_spectra {

enum class SolverMethod { accurate, baseline };

// Pivoted Cholesky factor of a quasi-Cauchy matrix, rows in original order:
// M = factor * factor^T. rank < N only when a pivot underflows 1e-300.
struct FactorForm {
  DenseMatrix factor;            // N x rank
  std::vector<int> pivot_order;  // pivot sequence, length rank
  double min_pivot = 0.0;
  double max_pivot = 0.0;
  int rank = 0;
  bool rank_truncated = false;
};

// Pivoted Cholesky of M_ij = sqrt(w_i w_j)/(x_i + x_j) by the quasi-Cauchy
// recurrence: eliminating pivot p rescales the generators by
// (x_i - x_p)/(x_i + x_p), so every factor entry is a product/quotient of
// sums and differences of node data. Relative accuracy does not degrade with
// the conditioning of M. Complete (diagonal) pivoting.
FactorForm accurate_factor(std::span<const double> nodes, std::span<const double> weights);

struct FactorSvd {
  std::vector<double> singular_values;  // descending
  DenseMatrix left_vectors;             // N x rank, columns are unit vectors
  int sweeps = 0;
};

// One-sided Jacobi orthogonalization of the factor's columns; deterministic
// cyclic-by-rows sweeps, convergence when all column cosines <= 1e-15.
// Throws conditioning_error after 60 sweeps.
FactorSvd jacobi_factor_svd(const FactorForm& factor);

struct SymmetricEig {
  std::vector<double> eigenvalues;  // descending
  DenseMatrix vectors;              // columns; empty when not requested
  int sweeps = 0;
};

// Classical cyclic two-sided Jacobi in working precision; the independent
// oracle path. Destroys its working copy of A internally.
SymmetricEig baseline_eig(const DenseMatrix& a, bool want_vectors = true);

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // strictly decreasing, > 0
  std::vector<double> masses;       // m_k = (q_k . u)^2, all > 0
  DenseMatrix vectors;              // columns q_k, sign q_k . u >= 0
  double orthogonality_residual = 0.0;
  SolverMethod method = SolverMethod::accurate;
  bool rank_truncated = false;
};

// Eigenpairs of the model operator with cyclic-vector masses. The masses are
// evaluated through the diagonal of the Lyapunov identity,
//   m_k = 2 lambda_k sum_i x_i q_k(i)^2,
// a sum of positive terms, instead of squaring the cancellation-prone
// inner product q_k . u directly.
SpectralDecomposition decompose(const ModelOperator& op, SolverMethod method);

}  // namespace hankel_spectra
