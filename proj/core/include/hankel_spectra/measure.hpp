#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace hankel_spectra {

struct Atom {
  double position;  // spectral variable x > 0
  double weight;    // mass > 0
};

// Finitely many point masses with strictly increasing positions. Coincident
// positions are merged by summing weights; merging is exact-equality only,
// fuzzy merging would corrupt involution round-trips.
class AtomicMeasure {
 public:
  explicit AtomicMeasure(std::vector<Atom> atoms);
  AtomicMeasure(std::vector<double> positions, std::vector<double> weights);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  const Atom& operator[](std::size_t k) const { return atoms_[k]; }

  double total_mass() const;
  double inverse_second_moment() const;
  double laplace_transform(double t) const;
  double cdf(double x) const;  // mu((0, x]), right-continuous

  AtomicMeasure sharp() const;  // {(x, w)} -> {(1/x, w/x^2)}
  AtomicMeasure scale_mass(double tau) const;
  AtomicMeasure scale_variable(double tau) const;

 private:
  std::vector<Atom> atoms_;
};

enum class DensityKind { exp_scale, indicator, mehler_sigma, rosenblum_rho, tabulated };

// A density w(x)dx given by a named base shape plus the transforms the
// library needs to stay closed under: # inversion, mass scaling and variable
// scaling.  Evaluation is
//   density(x) = mass_scale/var_scale * base(g(x/var_scale)),
// with g = identity or x -> 1/x when inverted.
class DensityMeasure {
 public:
  static DensityMeasure exp_scale(double beta);
  static DensityMeasure indicator(double a, double b);  // b may be +inf
  static DensityMeasure mehler_sigma();
  static DensityMeasure rosenblum_rho();
  static DensityMeasure tabulated(std::vector<std::pair<double, double>> samples);

  double operator()(double x) const;  // density value at x > 0
  double support_lower() const { return lo_; }
  double support_upper() const { return hi_; }  // +inf allowed

  DensityKind kind() const { return kind_; }
  bool inverted() const { return inverted_; }
  double mass_scale() const { return mass_scale_; }
  double variable_scale() const { return var_scale_; }

  DensityMeasure sharp() const;
  DensityMeasure scale_mass(double tau) const;
  DensityMeasure scale_variable(double tau) const;

  // exp_scale only; used for IO round trips.
  double exp_rate() const { return beta_; }
  const std::vector<std::pair<double, double>>& samples() const { return samples_; }
  std::pair<double, double> base_support() const;

  // Restores transform state when deserializing.
  static DensityMeasure with_transforms(DensityMeasure base, bool inverted,
                                        double mass_scale, double var_scale);

 private:
  DensityMeasure() = default;
  double base_density(double y) const;

  DensityKind kind_ = DensityKind::indicator;
  double beta_ = 0.0;                              // exp_scale
  double a_ = 0.0, b_ = 0.0;                       // indicator bounds
  std::vector<std::pair<double, double>> samples_; // tabulated, ascending x

  bool inverted_ = false;
  double mass_scale_ = 1.0;
  double var_scale_ = 1.0;
  double lo_ = 0.0, hi_ = 0.0;  // transformed support
};

using Measure = std::variant<AtomicMeasure, DensityMeasure>;

struct MeasureClass {
  bool is_finite = false;
  bool is_cofinite = false;
  bool is_carleson = false;
  bool bounded_support = false;
  bool blaschke_atomic = false;
};

// Divergent integrals surface as std::nullopt, never as a silent +inf.
std::optional<double> total_mass(const Measure& mu);
std::optional<double> inverse_second_moment(const Measure& mu);
std::optional<double> laplace_transform(const Measure& mu, double t);

double cdf(const Measure& mu, double x);

Measure sharp(const Measure& mu);
Measure scale_mass(const Measure& mu, double tau);
Measure scale_variable(const Measure& mu, double tau);

struct ClassifyOptions {
  // mu((0,a))/a <= bound over a in {2^j : j = -20..20}; a sampled
  // semi-decision for densities, the paper gives no algorithmic test.
  double carleson_bound = 1e6;
};
MeasureClass classify(const Measure& mu, const ClassifyOptions& opts = {});

// sup_x |F1 - F2| over both atom sets plus a refinement grid. Throws
// std::invalid_argument when either measure has divergent total mass.
double kolmogorov_distance(const Measure& mu1, const Measure& mu2);

bool is_atomic(const Measure& mu);
const AtomicMeasure& as_atomic(const Measure& mu);
const DensityMeasure& as_density(const Measure& mu);

}  // namespace hankel_spectra
