#include "hankel_spectra/model_operator.hpp"

#include <cmath>

#include "hankel_spectra/errors.hpp"
#include "hankel_spectra/parallel.hpp"

namespace hankel_spectra {

ModelOperator ModelOperator::build(const AtomicMeasure& mu) {
  const std::size_t n = mu.size();
  ModelOperator op;
  op.nodes_.resize(n);
  op.weights_.resize(n);
  op.cyclic_.resize(n);
  op.theta_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    op.nodes_[i] = mu[i].position;
    op.weights_[i] = mu[i].weight;
    op.cyclic_[i] = std::sqrt(mu[i].weight);
    op.theta_[i] = op.cyclic_[i] / mu[i].position;
  }
  // The accurate factorization divides by node differences; nearly coincident
  // nodes are a conditioning failure, not a representable input.
  for (std::size_t i = 1; i < n; ++i) {
    if (op.nodes_[i] - op.nodes_[i - 1] < 1e-14 * op.nodes_[i])
      throw conditioning_error("nearly coincident nodes in model operator");
  }

  op.matrix_ = DenseMatrix(n, n);
  auto& m = op.matrix_;
  const auto& x = op.nodes_;
  const auto& u = op.cyclic_;
  parallel_for_chunks(n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = u[i] * u[j] / (x[i] + x[j]);
      }
    }
  });
  return op;
}

double ModelOperator::lyapunov_residual() const {
  const std::size_t n = size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double lhs = nodes_[i] * matrix_(i, j) + matrix_(i, j) * nodes_[j];
      worst = std::max(worst, std::abs(lhs - cyclic_[i] * cyclic_[j]));
    }
  }
  return worst;
}

double ModelOperator::trace() const {
  double s = 0.0;
  for (std::size_t i = 0; i < size(); ++i) s += matrix_(i, i);
  return s;
}

double ModelOperator::frobenius_sq() const {
  double s = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) s += matrix_(i, j) * matrix_(i, j);
  }
  return s;
}

}  // namespace hankel_spectra
