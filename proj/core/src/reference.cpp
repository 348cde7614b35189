#include "hankel_spectra/reference.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <stdexcept>

#include "hankel_spectra/discretize.hpp"
#include "hankel_spectra/quadrature.hpp"
#include "hankel_spectra/spectral_map.hpp"

namespace hankel_spectra {

namespace {

// arcsech(y) = log(1/y + sqrt(1/y^2 - 1)), stable for small y.
double arcsech(double y) {
  const double inv = 1.0 / y;
  return std::log(inv + std::sqrt(inv * inv - 1.0));
}

// Lanczos g=7, n=9 (Godfrey coefficients); |rel err| ~ 1e-15 on Re z >= 0.5.
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double log_abs_gamma(std::complex<double> z) {
  bool shifted = false;
  if (z.real() < 0.5) {
    // Gamma(z) = Gamma(z+1)/z
    shifted = true;
    z += 1.0;
  }
  const std::complex<double> zz = z - 1.0;
  std::complex<double> series(kLanczos[0], 0.0);
  for (int i = 1; i < 9; ++i) series += kLanczos[i] / (zz + static_cast<double>(i));
  const std::complex<double> t = zz + 7.5;
  const std::complex<double> lg =
      0.5 * std::log(2.0 * M_PI) + (zz + 0.5) * std::log(t) - t + std::log(series);
  double result = lg.real();
  if (shifted) result -= std::log(std::abs(z - 1.0));
  return result;
}

}  // namespace

double log_abs_gamma_quarter(double k) {
  // |Gamma(conj z)| = |Gamma(z)|
  return log_abs_gamma(std::complex<double>(0.25, 0.5 * std::abs(k)));
}

double mehler_density(double lambda) {
  if (!(lambda > 0.0) || !(lambda < M_PI)) return 0.0;
  return arcsech(lambda / M_PI) / (M_PI * M_PI);
}

double rosenblum_density(double lambda) {
  if (!(lambda > 0.0) || !(lambda < M_PI)) return 0.0;
  const double k = arcsech(lambda / M_PI) / M_PI;
  const double log_gamma4 = 4.0 * log_abs_gamma_quarter(k);
  return 0.5 / (M_PI * M_PI) * (k / lambda) * std::exp(log_gamma4);
}

ReferenceSpectrum reference_info(ReferenceName name) {
  ReferenceSpectrum info;
  info.name = name;
  info.support_lo = 0.0;
  info.support_hi = M_PI;
  info.total_mass = (name == ReferenceName::mehler_sigma) ? 0.5 : 2.0;
  return info;
}

ReferenceName reference_by_name(const std::string& name) {
  if (name == "mehler" || name == "mehler_sigma") return ReferenceName::mehler_sigma;
  if (name == "rosenblum" || name == "rosenblum_rho") return ReferenceName::rosenblum_rho;
  throw std::invalid_argument("unknown reference spectrum: " + name);
}

namespace {
double density_of(ReferenceName name, double lambda) {
  return name == ReferenceName::mehler_sigma ? mehler_density(lambda)
                                             : rosenblum_density(lambda);
}
}  // namespace

double reference_cdf(ReferenceName name, double lambda) {
  if (lambda <= 0.0) return 0.0;
  const double hi = std::min(lambda, M_PI);
  const QuadratureResult r =
      integrate([name](double l) { return density_of(name, l); }, 0.0, hi);
  return r.value;
}

double compare(const AtomicMeasure& sigma, ReferenceName name) {
  std::set<double> points;
  for (const Atom& a : sigma.atoms()) points.insert(a.position);
  for (int i = 1; i <= 1000; ++i) points.insert(M_PI * static_cast<double>(i) / 1000.0);

  // One incremental quadrature pass over the sorted evaluation points.
  double sup = 0.0;
  double ref = 0.0;
  double prev = 0.0;
  for (double p : points) {
    const double hi = std::min(p, M_PI);
    if (hi > prev) {
      const QuadratureResult inc =
          integrate([name](double l) { return density_of(name, l); }, prev, hi);
      ref += inc.value;
      prev = hi;
    }
    // Right value and left limit of the atomic CDF at p.
    const double right = sigma.cdf(p);
    double left = right;
    for (auto it = sigma.atoms().rbegin(); it != sigma.atoms().rend(); ++it) {
      if (it->position == p) left -= it->weight;
      if (it->position <= p) break;
    }
    sup = std::max(sup, std::abs(right - ref));
    sup = std::max(sup, std::abs(left - ref));
  }
  return sup;
}

ReferencePipelineResult run_mehler_pipeline(int n_nodes, double t_lo, double t_hi) {
  DiscretizationConfig cfg;
  cfg.n_nodes = n_nodes;
  cfg.t_lo = t_lo;
  cfg.t_hi = t_hi;
  cfg.panels = 12;
  const AtomicMeasure mu_n = discretize(DensityMeasure::exp_scale(2.0), cfg);
  AtomicMeasure spectrum = omega(mu_n, SolverMethod::accurate);

  ReferencePipelineResult out{std::move(spectrum), 0.0, 0.0, 0.0};
  out.kolmogorov = compare(out.spectrum, ReferenceName::mehler_sigma);
  out.mass = out.spectrum.total_mass();
  out.lambda_max = out.spectrum.atoms().back().position;
  return out;
}

ReferencePipelineResult run_rosenblum_pipeline(int n_nodes) {
  const DensityMeasure flat = DensityMeasure::indicator(0.0, 2.0);
  const double bulk_lo = 1e-2;

  // 4 nodes per decade in the head, one-decade panels; depth grows with n so
  // the truncation error (~1/log(1/t_lo)) and the resolution improve together.
  const int depth = std::max(6, (90 * n_nodes) / 400);
  const int head_decades = depth - 2;  // head covers [10^-depth, bulk_lo]
  const int head_nodes = std::min(4 * head_decades, n_nodes - 24);
  DiscretizationConfig head_cfg;
  head_cfg.n_nodes = head_nodes;
  head_cfg.t_lo = std::pow(10.0, -static_cast<double>(depth));
  head_cfg.t_hi = bulk_lo;
  head_cfg.panels = head_decades;

  DiscretizationConfig bulk_cfg;
  bulk_cfg.n_nodes = n_nodes - head_nodes;
  bulk_cfg.t_lo = bulk_lo;
  bulk_cfg.t_hi = 2.0;
  bulk_cfg.panels = 6;

  const AtomicMeasure mu_n = merge(discretize(flat, head_cfg), discretize(flat, bulk_cfg));
  AtomicMeasure spectrum = omega(mu_n, SolverMethod::accurate);

  ReferencePipelineResult out{std::move(spectrum), 0.0, 0.0, 0.0};
  out.kolmogorov = compare(out.spectrum, ReferenceName::rosenblum_rho);
  out.mass = out.spectrum.total_mass();
  out.lambda_max = out.spectrum.atoms().back().position;
  return out;
}

}  // namespace hankel_spectra
