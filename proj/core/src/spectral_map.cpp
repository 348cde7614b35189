#include "hankel_spectra/spectral_map.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hankel_spectra/errors.hpp"
#include "hankel_spectra/parallel.hpp"
#include "hankel_spectra/quadrature.hpp"

namespace hankel_spectra {

AtomicMeasure omega(const AtomicMeasure& mu, SolverMethod method) {
  const SpectralDecomposition dec = decompose(ModelOperator::build(mu), method);
  const std::size_t r = dec.eigenvalues.size();
  std::vector<Atom> atoms(r);
  for (std::size_t k = 0; k < r; ++k) {
    // eigenvalues come descending; atoms want ascending positions
    const std::size_t src = r - 1 - k;
    atoms[k] = {dec.eigenvalues[src], dec.masses[src]};
  }
  return AtomicMeasure(std::move(atoms));
}

AtomicMeasure omega_sharp(const AtomicMeasure& mu, SolverMethod method) {
  return omega(mu.sharp(), method);
}

RoundtripError roundtrip_error(const AtomicMeasure& mu, SolverMethod method) {
  const AtomicMeasure twice = omega(omega(mu, method), method);
  if (twice.size() != mu.size())
    throw conditioning_error("involution round trip changed the atom count");
  RoundtripError err;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    err.node_error = std::max(err.node_error,
                              std::abs(twice[k].position - mu[k].position) / mu[k].position);
    err.weight_error = std::max(err.weight_error,
                                std::abs(twice[k].weight - mu[k].weight) / mu[k].weight);
  }
  return err;
}

IdentityReport identity_report(const AtomicMeasure& mu, SolverMethod method) {
  const ModelOperator op = ModelOperator::build(mu);
  const SpectralDecomposition dec = decompose(op, method);

  IdentityReport report;
  report.lyapunov_residual = op.lyapunov_residual();

  const double mass_in = mu.total_mass();
  double mass_out = 0.0, trace_out = 0.0, hs_out = 0.0;
  for (std::size_t k = 0; k < dec.eigenvalues.size(); ++k) {
    mass_out += dec.masses[k];
    trace_out += dec.eigenvalues[k];
    hs_out += dec.eigenvalues[k] * dec.eigenvalues[k];
  }
  report.mass_error = std::abs(mass_out - mass_in) / mass_in;
  report.trace_error = std::abs(trace_out - op.trace()) / op.trace();
  report.hs_error = std::abs(hs_out - op.frobenius_sq()) / op.frobenius_sq();

  const RoundtripError rt = roundtrip_error(mu, method);
  report.roundtrip_node_error = rt.node_error;
  report.roundtrip_weight_error = rt.weight_error;
  return report;
}

HankelCrossCheck hankel_cross_check(const AtomicMeasure& mu, const HankelGrid& grid,
                                    double tol) {
  if (grid.n_t < static_cast<int>(mu.size()))
    throw std::invalid_argument("hankel_cross_check needs n_t >= number of atoms");
  const std::size_t n = static_cast<std::size_t>(grid.n_t);

  std::vector<double> t, d;
  gauss_legendre(grid.n_t, 0.0, grid.t_max, t, d);
  std::vector<double> sqrt_d(n);
  for (std::size_t i = 0; i < n; ++i) sqrt_d[i] = std::sqrt(d[i]);

  DenseMatrix h(n, n);
  parallel_for_chunks(n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        h(i, j) = mu.laplace_transform(t[i] + t[j]) * sqrt_d[i] * sqrt_d[j];
      }
    }
  });

  const SymmetricEig grid_eig = baseline_eig(h, /*want_vectors=*/false);
  const SpectralDecomposition model = decompose(ModelOperator::build(mu), SolverMethod::accurate);

  HankelCrossCheck out;
  const std::size_t rank = model.eigenvalues.size();
  out.grid_eigenvalues.assign(grid_eig.eigenvalues.begin(),
                              grid_eig.eigenvalues.begin() + static_cast<std::ptrdiff_t>(rank));
  for (std::size_t k = 0; k < rank; ++k) {
    out.max_rel_deviation =
        std::max(out.max_rel_deviation,
                 std::abs(grid_eig.eigenvalues[k] - model.eigenvalues[k]) / model.eigenvalues[k]);
  }
  for (std::size_t k = rank; k < n; ++k) {
    out.tail_max = std::max(out.tail_max, std::abs(grid_eig.eigenvalues[k]));
  }
  out.t_max_sufficient = out.max_rel_deviation <= tol;
  return out;
}

}  // namespace hankel_spectra
