#pragma once

#include <vector>

#include "hankel_spectra/eigensolve.hpp"
#include "hankel_spectra/measure.hpp"

namespace hankel_spectra {

// The spectral map: sigma = sum_k m_k delta_{lambda_k} from the eigenpairs of
// the model operator of mu. Preserves total mass; N atoms in, N atoms out.
AtomicMeasure omega(const AtomicMeasure& mu, SolverMethod method = SolverMethod::accurate);

// The co-finite variant: omega(sharp(mu)). Total mass of the result equals
// the inverse second moment of mu.
AtomicMeasure omega_sharp(const AtomicMeasure& mu, SolverMethod method = SolverMethod::accurate);

struct RoundtripError {
  double node_error = 0.0;    // max_k |x'_k - x_k| / x_k
  double weight_error = 0.0;  // max_k |w'_k - w_k| / w_k
};

// Errors of omega(omega(mu)) against mu, atoms matched by sorted position.
RoundtripError roundtrip_error(const AtomicMeasure& mu,
                               SolverMethod method = SolverMethod::accurate);

struct IdentityReport {
  double mass_error = 0.0;   // |sigma(R+) - mu(R+)| / mu(R+)
  double trace_error = 0.0;  // sum lambda vs (1/2) sum w/x, relative
  double hs_error = 0.0;     // sum lambda^2 vs sum_ij w_i w_j/(x_i+x_j)^2, relative
  double lyapunov_residual = 0.0;
  double roundtrip_node_error = 0.0;
  double roundtrip_weight_error = 0.0;
};

IdentityReport identity_report(const AtomicMeasure& mu,
                               SolverMethod method = SolverMethod::accurate);

struct HankelGrid {
  int n_t = 400;
  double t_max = 40.0;
};

struct HankelCrossCheck {
  // max_k |grid lambda_k - model lambda_k| / model lambda_k over the top N
  double max_rel_deviation = 0.0;
  // largest grid eigenvalue beyond the top N (finite-rank structure)
  double tail_max = 0.0;
  bool t_max_sufficient = true;
  std::vector<double> grid_eigenvalues;  // top N, descending
};

// Discretizes the integral Hankel operator H_ij = h_mu(t_i+t_j) sqrt(d_i d_j)
// on a Gauss-Legendre t-grid and compares its top-N spectrum (baseline
// solver, deliberately independent of the accurate factorization) against
// the model operator's.
HankelCrossCheck hankel_cross_check(const AtomicMeasure& mu, const HankelGrid& grid,
                                    double tol = 1e-6);

}  // namespace hankel_spectra
