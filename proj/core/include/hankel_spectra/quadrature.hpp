#pragma once

#include <functional>
#include <vector>

namespace hankel_spectra {

using Integrand = std::function<double(double)>;

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  // Budget of interval bisections for the adaptive rule. Exhausting it
  // without meeting the tolerance is reported as non-convergence, which is
  // how divergent integrals surface.
  std::size_t max_intervals = std::size_t{1} << 20;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
};

// Adaptive Gauss-Kronrod 15(7) on a finite interval. Endpoint singularities
// are never sampled (all nodes are interior); integrable ones converge,
// non-integrable ones exhaust the budget and come back non-converged.
QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureOptions& opts = {});

// Integral over [a, +inf) via geometrically growing panels, each handled by
// the adaptive rule. Detects divergence when panel contributions stop
// decaying.
QuadratureResult integrate_to_infinity(const Integrand& f, double a,
                                       const QuadratureOptions& opts = {});

// n-point Gauss-Legendre rule on [a, b]; nodes ascending.
void gauss_legendre(int n, double a, double b,
                    std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace hankel_spectra
