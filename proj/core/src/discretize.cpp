#include "hankel_spectra/discretize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hankel_spectra/quadrature.hpp"

namespace hankel_spectra {

namespace {

void validate(const DiscretizationConfig& cfg) {
  if (cfg.n_nodes < 1) throw std::invalid_argument("n_nodes must be >= 1");
  if (!(cfg.t_lo > 0.0) || !(cfg.t_hi > cfg.t_lo) || std::isinf(cfg.t_hi))
    throw std::invalid_argument("truncation needs 0 < t_lo < t_hi < inf");
}

int auto_panels(double t_lo, double t_hi) {
  const double decades = std::log10(t_hi / t_lo);
  return std::max(1, static_cast<int>(std::ceil(1.25 * decades)));
}

}  // namespace

DiscretizationConfig default_config(const DensityMeasure& mu, int n_nodes) {
  DiscretizationConfig cfg;
  cfg.n_nodes = n_nodes;
  if (mu.kind() == DensityKind::exp_scale && !mu.inverted() && mu.variable_scale() == 1.0) {
    cfg.t_lo = 1e-8;
    cfg.t_hi = 40.0 / mu.exp_rate();
    return cfg;
  }
  const double lo = mu.support_lower();
  const double hi = mu.support_upper();
  cfg.t_lo = std::max(lo, 1e-8);
  cfg.t_hi = std::isinf(hi) ? std::max(1.0, cfg.t_lo) * 1e8 : hi;
  return cfg;
}

AtomicMeasure discretize(const DensityMeasure& mu, const DiscretizationConfig& cfg) {
  validate(cfg);
  std::vector<double> nodes, weights, panel_nodes, panel_weights;
  nodes.reserve(cfg.n_nodes);
  weights.reserve(cfg.n_nodes);

  auto emit_panel = [&](int k, double lo, double hi) {
    if (k < 1) return;
    gauss_legendre(k, lo, hi, panel_nodes, panel_weights);
    for (int i = 0; i < k; ++i) {
      nodes.push_back(panel_nodes[i]);
      weights.push_back(panel_weights[i] * mu(panel_nodes[i]));
    }
  };

  if (cfg.rule == PanelRule::single_panel) {
    emit_panel(cfg.n_nodes, cfg.t_lo, cfg.t_hi);
  } else {
    const int panels = std::min(cfg.panels > 0 ? cfg.panels : auto_panels(cfg.t_lo, cfg.t_hi),
                                cfg.n_nodes);
    const double ratio = cfg.t_hi / cfg.t_lo;
    const int base = cfg.n_nodes / panels;
    const int extra = cfg.n_nodes % panels;
    double lo = cfg.t_lo;
    for (int j = 0; j < panels; ++j) {
      const double hi = (j + 1 == panels)
                            ? cfg.t_hi
                            : cfg.t_lo * std::pow(ratio, static_cast<double>(j + 1) / panels);
      emit_panel(base + (j < extra ? 1 : 0), lo, hi);
      lo = hi;
    }
  }

  std::vector<Atom> atoms;
  atoms.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (weights[i] >= 1e-300) atoms.push_back({nodes[i], weights[i]});
  }
  if (atoms.empty())
    throw std::invalid_argument("discretization produced an empty measure (density vanishes on truncation)");
  return AtomicMeasure(std::move(atoms));
}

std::optional<double> tail_mass(const DensityMeasure& mu, const DiscretizationConfig& cfg) {
  validate(cfg);
  const double lo = mu.support_lower();
  const double hi = mu.support_upper();
  double total = 0.0;

  const double head_hi = std::min(cfg.t_lo, hi);
  if (head_hi > lo) {
    const QuadratureResult head = integrate([&mu](double x) { return mu(x); }, lo, head_hi);
    if (!head.converged) return std::nullopt;
    total += head.value;
  }
  if (hi > cfg.t_hi) {
    const double start = std::max(cfg.t_hi, lo);
    QuadratureResult tail;
    if (std::isinf(hi)) {
      tail = integrate_to_infinity([&mu](double x) { return mu(x); }, start);
    } else {
      tail = integrate([&mu](double x) { return mu(x); }, start, hi);
    }
    if (!tail.converged) return std::nullopt;
    total += tail.value;
  }
  return total;
}

AtomicMeasure merge(const AtomicMeasure& a, const AtomicMeasure& b) {
  std::vector<Atom> atoms = a.atoms();
  atoms.insert(atoms.end(), b.atoms().begin(), b.atoms().end());
  return AtomicMeasure(std::move(atoms));
}

}  // namespace hankel_spectra
