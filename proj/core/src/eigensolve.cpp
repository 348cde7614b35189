#include "hankel_spectra/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hankel_spectra/errors.hpp"

namespace hankel_spectra {

namespace {
constexpr double kCosineTol = 1e-15;
constexpr int kMaxSweeps = 60;
constexpr double kPivotFloor = 1e-300;
}  // namespace

FactorForm accurate_factor(std::span<const double> nodes, std::span<const double> weights) {
  const std::size_t n = nodes.size();
  std::vector<double> g(n);  // generators; M^(k)_ij = g_i g_j / (x_i + x_j)
  for (std::size_t i = 0; i < n; ++i) g[i] = std::sqrt(weights[i]);

  FactorForm out;
  out.factor = DenseMatrix(n, n);
  out.pivot_order.reserve(n);
  std::vector<std::size_t> active(n);
  std::iota(active.begin(), active.end(), 0);

  for (std::size_t k = 0; k < n; ++k) {
    // Complete pivoting = max diagonal of the current Schur complement.
    std::size_t best = 0;
    double best_diag = -1.0;
    for (std::size_t idx = 0; idx < active.size(); ++idx) {
      const std::size_t i = active[idx];
      const double diag = g[i] * g[i] / (2.0 * nodes[i]);
      if (diag > best_diag) {
        best_diag = diag;
        best = idx;
      }
    }
    if (best_diag < kPivotFloor) {
      out.rank_truncated = true;
      break;
    }
    const std::size_t p = active[best];
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best));
    out.pivot_order.push_back(static_cast<int>(p));
    if (k == 0) out.max_pivot = best_diag;
    out.min_pivot = best_diag;

    const double col_scale = std::sqrt(best_diag);
    out.factor(p, k) = col_scale;
    for (const std::size_t i : active) {
      // Column of the factor: M^(k)_ip / sqrt(M^(k)_pp).
      out.factor(i, k) = g[i] * g[p] / (nodes[i] + nodes[p]) / col_scale;
    }
    for (const std::size_t i : active) {
      g[i] *= (nodes[i] - nodes[p]) / (nodes[i] + nodes[p]);
    }
  }
  out.rank = static_cast<int>(out.pivot_order.size());

  if (out.rank < static_cast<int>(n)) {
    DenseMatrix trimmed(n, static_cast<std::size_t>(out.rank));
    for (std::size_t i = 0; i < n; ++i)
      for (int j = 0; j < out.rank; ++j) trimmed(i, static_cast<std::size_t>(j)) = out.factor(i, j);
    out.factor = std::move(trimmed);
  }
  return out;
}

FactorSvd jacobi_factor_svd(const FactorForm& factor) {
  const std::size_t n = factor.factor.rows();
  const std::size_t r = factor.factor.cols();

  // Column-major working copy: rotations touch whole columns.
  std::vector<std::vector<double>> col(r, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j) col[j][i] = factor.factor(i, j);

  int sweeps = 0;
  for (; sweeps < kMaxSweeps; ++sweeps) {
    double worst_cosine = 0.0;
    for (std::size_t i = 0; i + 1 < r; ++i) {
      for (std::size_t j = i + 1; j < r; ++j) {
        double aii = 0.0, ajj = 0.0, aij = 0.0;
        const double* ci = col[i].data();
        const double* cj = col[j].data();
        for (std::size_t t = 0; t < n; ++t) {
          aii += ci[t] * ci[t];
          ajj += cj[t] * cj[t];
          aij += ci[t] * cj[t];
        }
        if (aii == 0.0 || ajj == 0.0) continue;
        const double cosine = std::abs(aij) / std::sqrt(aii * ajj);
        worst_cosine = std::max(worst_cosine, cosine);
        if (cosine <= kCosineTol) continue;

        const double tau = (ajj - aii) / (2.0 * aij);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        double* wi = col[i].data();
        double* wj = col[j].data();
        for (std::size_t tt = 0; tt < n; ++tt) {
          const double vi = wi[tt];
          const double vj = wj[tt];
          wi[tt] = c * vi - s * vj;
          wj[tt] = s * vi + c * vj;
        }
      }
    }
    if (worst_cosine <= kCosineTol) break;
  }
  if (sweeps >= kMaxSweeps)
    throw conditioning_error("one-sided Jacobi failed to converge in 60 sweeps");

  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> norms(r);
  for (std::size_t j = 0; j < r; ++j) {
    double s = 0.0;
    for (double v : col[j]) s += v * v;
    norms[j] = std::sqrt(s);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&norms](std::size_t a, std::size_t b) { return norms[a] > norms[b]; });

  FactorSvd out;
  out.sweeps = sweeps + 1;
  out.singular_values.resize(r);
  out.left_vectors = DenseMatrix(n, r);
  for (std::size_t j = 0; j < r; ++j) {
    const std::size_t src = order[j];
    out.singular_values[j] = norms[src];
    const double inv = norms[src] > 0.0 ? 1.0 / norms[src] : 0.0;
    for (std::size_t i = 0; i < n; ++i) out.left_vectors(i, j) = col[src][i] * inv;
  }
  return out;
}

SymmetricEig baseline_eig(const DenseMatrix& a_in, bool want_vectors) {
  const std::size_t n = a_in.rows();
  DenseMatrix a = a_in;
  DenseMatrix q;
  if (want_vectors) {
    q = DenseMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) q(i, i) = 1.0;
  }

  double max_diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, std::abs(a(i, i)));
  // Absolute floor keeps the sweep from chasing rounding noise in blocks
  // that are numerically rank deficient (working-precision semantics).
  const double abs_floor = 0.5 * std::numeric_limits<double>::epsilon() * max_diag;

  int sweeps = 0;
  for (; sweeps < kMaxSweeps; ++sweeps) {
    std::size_t rotations = 0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t r = p + 1; r < n; ++r) {
        const double apr = a(p, r);
        if (std::abs(apr) <= abs_floor) continue;
        const double scale = std::sqrt(std::abs(a(p, p))) * std::sqrt(std::abs(a(r, r)));
        if (std::abs(apr) <= kCosineTol * std::max(scale, 1e-300)) continue;
        ++rotations;
        const double theta = (a(r, r) - a(p, p)) / (2.0 * apr);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        const double app = a(p, p), arr = a(r, r);
        a(p, p) = app - t * apr;
        a(r, r) = arr + t * apr;
        a(p, r) = 0.0;
        a(r, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == r) continue;
          const double akp = a(k, p);
          const double akr = a(k, r);
          a(k, p) = c * akp - s * akr;
          a(k, r) = s * akp + c * akr;
          a(p, k) = a(k, p);
          a(r, k) = a(k, r);
        }
        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const double qkp = q(k, p);
            const double qkr = q(k, r);
            q(k, p) = c * qkp - s * qkr;
            q(k, r) = s * qkp + c * qkr;
          }
        }
      }
    }
    if (rotations == 0) break;
  }
  if (sweeps >= kMaxSweeps)
    throw conditioning_error("cyclic Jacobi failed to converge in 60 sweeps");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i);
  std::stable_sort(order.begin(), order.end(),
                   [&diag](std::size_t l, std::size_t r) { return diag[l] > diag[r]; });

  SymmetricEig out;
  out.sweeps = sweeps + 1;
  out.eigenvalues.resize(n);
  for (std::size_t j = 0; j < n; ++j) out.eigenvalues[j] = diag[order[j]];
  if (want_vectors) {
    out.vectors = DenseMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = q(i, order[j]);
  }
  return out;
}

SpectralDecomposition decompose(const ModelOperator& op, SolverMethod method) {
  const std::size_t n = op.size();
  const auto& x = op.nodes();
  const auto& u = op.cyclic_vector();

  SpectralDecomposition out;
  out.method = method;

  if (method == SolverMethod::accurate) {
    FactorForm f = accurate_factor(op.nodes(), op.weights());
    out.rank_truncated = f.rank_truncated;
    FactorSvd svd = jacobi_factor_svd(f);
    const std::size_t r = svd.singular_values.size();
    out.eigenvalues.resize(r);
    for (std::size_t k = 0; k < r; ++k)
      out.eigenvalues[k] = svd.singular_values[k] * svd.singular_values[k];
    out.vectors = std::move(svd.left_vectors);
  } else {
    SymmetricEig eig = baseline_eig(op.matrix(), true);
    out.eigenvalues = std::move(eig.eigenvalues);
    out.vectors = std::move(eig.vectors);
  }

  const std::size_t r = out.eigenvalues.size();
  for (std::size_t k = 0; k < r; ++k) {
    if (!(out.eigenvalues[k] > 0.0))
      throw conditioning_error("nonpositive eigenvalue in model operator decomposition");
    if (k > 0 && !(out.eigenvalues[k] < out.eigenvalues[k - 1]))
      throw conditioning_error("eigenvalue tie at working precision (spectrum must be simple)");
  }

  // Deterministic sign: q_k . u >= 0.
  for (std::size_t k = 0; k < r; ++k) {
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += out.vectors(i, k) * u[i];
    if (dot < 0.0)
      for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = -out.vectors(i, k);
  }

  // Cyclic-vector masses through the Lyapunov diagonal identity: every term
  // is positive, so tiny masses keep their relative accuracy.
  out.masses.resize(r);
  for (std::size_t k = 0; k < r; ++k) {
    double rayleigh = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      rayleigh += x[i] * out.vectors(i, k) * out.vectors(i, k);
    out.masses[k] = 2.0 * out.eigenvalues[k] * rayleigh;
    if (!(out.masses[k] > 0.0))
      throw conditioning_error("nonpositive cyclic-vector mass (u must be cyclic)");
  }

  out.orthogonality_residual = out.vectors.column_orthogonality_residual();
  return out;
}

}  // namespace hankel_spectra
