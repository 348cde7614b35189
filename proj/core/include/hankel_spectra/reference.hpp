#pragma once

#include <string>

#include "hankel_spectra/measure.hpp"

namespace hankel_spectra {

enum class ReferenceName { mehler_sigma, rosenblum_rho };

// Spectral density of the Hankel operator with kernel 1/(t+2), i.e. of
// mu = e^{-2x}dx: pi^-2 * arcsech(lambda/pi) on (0, pi).
double mehler_density(double lambda);

// Spectral density of the Hankel operator with kernel e^{-t/2}/t wrt the
// vector w: (2 pi^2)^-1 (k/lambda) |Gamma(1/4 + ik/2)|^4 on (0, pi), with
// k = arcsech(lambda/pi)/pi.
double rosenblum_density(double lambda);

// log |Gamma(1/4 + ik/2)|, evaluated in log space (complex Lanczos).
double log_abs_gamma_quarter(double k);

struct ReferenceSpectrum {
  ReferenceName name;
  double support_lo = 0.0;
  double support_hi = 0.0;  // pi
  double total_mass = 0.0;  // 0.5 for mehler, 2 for rosenblum
};
ReferenceSpectrum reference_info(ReferenceName name);
ReferenceName reference_by_name(const std::string& name);

// Integral of the density from 0 to lambda (adaptive quadrature).
double reference_cdf(ReferenceName name, double lambda);

// Kolmogorov distance between an atomic spectrum and the reference CDF over
// the atom positions plus a 1000-point grid on [0, pi].
double compare(const AtomicMeasure& sigma, ReferenceName name);

struct ReferencePipelineResult {
  AtomicMeasure spectrum;
  double kolmogorov = 0.0;
  double mass = 0.0;
  double lambda_max = 0.0;
};

// Mehler pipeline: discretize e^{-2x}dx on [t_lo, t_hi] (composite
// Gauss-Legendre, geometric panels) and push through the spectral map.
ReferencePipelineResult run_mehler_pipeline(int n_nodes, double t_lo = 1e-8,
                                            double t_hi = 30.0);

// Rosenblum pipeline: Omega^#(chi_{(1/2,inf)}dx) realized as
// Omega(chi_{(0,2)}dx). The head of (0,2) carries the continuum of the
// spectrum, so the truncation depth scales with the node budget:
// ~head_decades(n) = 90 n/400 one-decade panels with 4 nodes each, remainder
// on (0.01, 2).
ReferencePipelineResult run_rosenblum_pipeline(int n_nodes);

}  // namespace hankel_spectra
