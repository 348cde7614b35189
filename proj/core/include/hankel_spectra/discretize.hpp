#pragma once

#include <optional>

#include "hankel_spectra/measure.hpp"

namespace hankel_spectra {

enum class PanelRule { composite_gauss_legendre, single_panel };

struct DiscretizationConfig {
  int n_nodes = 0;
  double t_lo = 0.0;  // 0 < t_lo < t_hi
  double t_hi = 0.0;
  PanelRule rule = PanelRule::composite_gauss_legendre;
  // Number of geometric panels for the composite rule; 0 picks one panel per
  // ~0.8 decades of [t_lo, t_hi]. Panels are graded toward 0 because the
  // spectral map is sensitive to small-x atoms through 1/(x+y).
  int panels = 0;
};

// Default truncation per density shape. exp_scale(beta) gets [1e-8, 40/beta];
// shapes with finite support get their support clipped to [1e-8, hi].
DiscretizationConfig default_config(const DensityMeasure& mu, int n_nodes);

// Quadrature nodes become atom positions, quadrature-weight * density values
// become atom weights. Weights below 1e-300 are dropped; an all-dropped
// result throws std::invalid_argument.
AtomicMeasure discretize(const DensityMeasure& mu, const DiscretizationConfig& cfg);

// Estimated mass of support \ [t_lo, t_hi]; nullopt when the tail diverges.
std::optional<double> tail_mass(const DensityMeasure& mu, const DiscretizationConfig& cfg);

// Union of two atom sets (weights of coincident positions add).
AtomicMeasure merge(const AtomicMeasure& a, const AtomicMeasure& b);

}  // namespace hankel_spectra
