#include "hankel_spectra/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "hankel_spectra/quadrature.hpp"

namespace hankel_spectra {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double invert_bound(double v) {
  if (v == 0.0) return kInf;
  if (std::isinf(v)) return 0.0;
  return 1.0 / v;
}
}  // namespace

// ---------------------------------------------------------------------------
// AtomicMeasure
// ---------------------------------------------------------------------------

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw std::invalid_argument("atomic measure needs at least one atom");
  for (const Atom& a : atoms_) {
    if (!(a.position > 0.0) || !std::isfinite(a.position))
      throw std::invalid_argument("atom position must be finite and > 0");
    if (!(a.weight > 0.0) || !std::isfinite(a.weight))
      throw std::invalid_argument("atom weight must be finite and > 0");
  }
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& l, const Atom& r) { return l.position < r.position; });
  // Merge exactly coincident positions by summing weights.
  std::size_t out = 0;
  for (std::size_t i = 1; i < atoms_.size(); ++i) {
    if (atoms_[i].position == atoms_[out].position) {
      atoms_[out].weight += atoms_[i].weight;
    } else {
      atoms_[++out] = atoms_[i];
    }
  }
  atoms_.resize(out + 1);
}

AtomicMeasure::AtomicMeasure(std::vector<double> positions, std::vector<double> weights)
    : AtomicMeasure([&] {
        if (positions.size() != weights.size())
          throw std::invalid_argument("positions/weights size mismatch");
        std::vector<Atom> atoms(positions.size());
        for (std::size_t i = 0; i < positions.size(); ++i)
          atoms[i] = {positions[i], weights[i]};
        return atoms;
      }()) {}

double AtomicMeasure::total_mass() const {
  double s = 0.0;
  for (const Atom& a : atoms_) s += a.weight;
  return s;
}

double AtomicMeasure::inverse_second_moment() const {
  double s = 0.0;
  for (const Atom& a : atoms_) s += a.weight / (a.position * a.position);
  return s;
}

double AtomicMeasure::laplace_transform(double t) const {
  double s = 0.0;
  for (const Atom& a : atoms_) s += a.weight * std::exp(-t * a.position);
  return s;
}

double AtomicMeasure::cdf(double x) const {
  double s = 0.0;
  for (const Atom& a : atoms_) {
    if (a.position > x) break;
    s += a.weight;
  }
  return s;
}

AtomicMeasure AtomicMeasure::sharp() const {
  std::vector<Atom> out(atoms_.size());
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const Atom& a = atoms_[i];
    out[i] = {1.0 / a.position, a.weight / (a.position * a.position)};
  }
  return AtomicMeasure(std::move(out));
}

AtomicMeasure AtomicMeasure::scale_mass(double tau) const {
  if (!(tau > 0.0)) throw std::invalid_argument("scale factor must be > 0");
  std::vector<Atom> out(atoms_);
  for (Atom& a : out) a.weight *= tau;
  return AtomicMeasure(std::move(out));
}

AtomicMeasure AtomicMeasure::scale_variable(double tau) const {
  if (!(tau > 0.0)) throw std::invalid_argument("scale factor must be > 0");
  std::vector<Atom> out(atoms_);
  for (Atom& a : out) a.position *= tau;
  return AtomicMeasure(std::move(out));
}

// ---------------------------------------------------------------------------
// DensityMeasure
// ---------------------------------------------------------------------------

DensityMeasure DensityMeasure::exp_scale(double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("exp_scale needs beta > 0");
  DensityMeasure d;
  d.kind_ = DensityKind::exp_scale;
  d.beta_ = beta;
  d.lo_ = 0.0;
  d.hi_ = kInf;
  return d;
}

DensityMeasure DensityMeasure::indicator(double a, double b) {
  if (!(a >= 0.0) || !(b > a)) throw std::invalid_argument("indicator needs 0 <= a < b");
  DensityMeasure d;
  d.kind_ = DensityKind::indicator;
  d.a_ = a;
  d.b_ = b;
  d.lo_ = a;
  d.hi_ = b;
  return d;
}

DensityMeasure DensityMeasure::mehler_sigma() {
  DensityMeasure d;
  d.kind_ = DensityKind::mehler_sigma;
  d.lo_ = 0.0;
  d.hi_ = M_PI;
  return d;
}

DensityMeasure DensityMeasure::rosenblum_rho() {
  DensityMeasure d;
  d.kind_ = DensityKind::rosenblum_rho;
  d.lo_ = 0.0;
  d.hi_ = M_PI;
  return d;
}

DensityMeasure DensityMeasure::tabulated(std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 2) throw std::invalid_argument("tabulated density needs >= 2 samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!(samples[i].first > 0.0)) throw std::invalid_argument("tabulated x must be > 0");
    if (samples[i].second < 0.0) throw std::invalid_argument("tabulated density must be >= 0");
    if (i > 0 && !(samples[i].first > samples[i - 1].first))
      throw std::invalid_argument("tabulated x must be strictly increasing");
  }
  DensityMeasure d;
  d.kind_ = DensityKind::tabulated;
  d.lo_ = samples.front().first;
  d.hi_ = samples.back().first;
  d.samples_ = std::move(samples);
  return d;
}

std::pair<double, double> DensityMeasure::base_support() const {
  switch (kind_) {
    case DensityKind::exp_scale: return {0.0, kInf};
    case DensityKind::indicator: return {a_, b_};
    case DensityKind::mehler_sigma:
    case DensityKind::rosenblum_rho: return {0.0, M_PI};
    case DensityKind::tabulated: return {samples_.front().first, samples_.back().first};
  }
  return {0.0, kInf};
}

DensityMeasure DensityMeasure::with_transforms(DensityMeasure base, bool inverted,
                                               double mass_scale, double var_scale) {
  if (!(mass_scale > 0.0) || !(var_scale > 0.0))
    throw std::invalid_argument("scale factors must be > 0");
  base.inverted_ = inverted;
  base.mass_scale_ = mass_scale;
  base.var_scale_ = var_scale;
  auto [l, h] = base.base_support();
  if (inverted) {
    const double new_l = invert_bound(h);
    const double new_h = invert_bound(l);
    l = new_l;
    h = new_h;
  }
  base.lo_ = l * var_scale;
  base.hi_ = std::isinf(h) ? kInf : h * var_scale;
  return base;
}

// Forward declaration of the reference densities; definitions live in
// reference.cpp next to the rest of the analytic spectra.
double mehler_density(double lambda);
double rosenblum_density(double lambda);

double DensityMeasure::base_density(double y) const {
  switch (kind_) {
    case DensityKind::exp_scale:
      return y >= 0.0 ? std::exp(-beta_ * y) : 0.0;
    case DensityKind::indicator:
      return (y > a_ && y < b_) ? 1.0 : 0.0;
    case DensityKind::mehler_sigma:
      return mehler_density(y);
    case DensityKind::rosenblum_rho:
      return rosenblum_density(y);
    case DensityKind::tabulated: {
      if (y <= samples_.front().first || y >= samples_.back().first) {
        if (y == samples_.front().first) return samples_.front().second;
        if (y == samples_.back().first) return samples_.back().second;
        return 0.0;
      }
      auto it = std::upper_bound(samples_.begin(), samples_.end(), y,
                                 [](double v, const auto& s) { return v < s.first; });
      const auto& [x1, v1] = *it;
      const auto& [x0, v0] = *(it - 1);
      const double t = (y - x0) / (x1 - x0);
      return v0 + t * (v1 - v0);
    }
  }
  return 0.0;
}

double DensityMeasure::operator()(double x) const {
  if (!(x > 0.0)) return 0.0;
  double y = x / var_scale_;
  if (inverted_) y = 1.0 / y;
  return mass_scale_ / var_scale_ * base_density(y);
}

DensityMeasure DensityMeasure::sharp() const {
  DensityMeasure d = *this;
  // (g, tau, c) -> (toggle g, 1/tau, c/tau^2); support maps to [1/hi, 1/lo].
  d.inverted_ = !inverted_;
  d.var_scale_ = 1.0 / var_scale_;
  d.mass_scale_ = mass_scale_ / (var_scale_ * var_scale_);
  d.lo_ = invert_bound(hi_);
  d.hi_ = invert_bound(lo_);
  if (kind_ == DensityKind::indicator && !inverted_ && var_scale_ == 1.0) {
    // chi_(a,b)(1/x) = chi_(1/b,1/a)(x): keep the representation closed-form.
    DensityMeasure plain = DensityMeasure::indicator(invert_bound(b_), invert_bound(a_));
    plain.mass_scale_ = mass_scale_;
    return plain;
  }
  return d;
}

DensityMeasure DensityMeasure::scale_mass(double tau) const {
  if (!(tau > 0.0)) throw std::invalid_argument("scale factor must be > 0");
  DensityMeasure d = *this;
  d.mass_scale_ *= tau;
  return d;
}

DensityMeasure DensityMeasure::scale_variable(double tau) const {
  if (!(tau > 0.0)) throw std::invalid_argument("scale factor must be > 0");
  DensityMeasure d = *this;
  d.var_scale_ *= tau;
  d.lo_ = lo_ * tau;
  d.hi_ = std::isinf(hi_) ? kInf : hi_ * tau;
  return d;
}

// ---------------------------------------------------------------------------
// Measure-level operations
// ---------------------------------------------------------------------------

bool is_atomic(const Measure& mu) { return std::holds_alternative<AtomicMeasure>(mu); }

const AtomicMeasure& as_atomic(const Measure& mu) {
  if (!is_atomic(mu)) throw std::invalid_argument("expected an atomic measure");
  return std::get<AtomicMeasure>(mu);
}

const DensityMeasure& as_density(const Measure& mu) {
  if (is_atomic(mu)) throw std::invalid_argument("expected a density measure");
  return std::get<DensityMeasure>(mu);
}

namespace {

std::optional<double> density_integral(const DensityMeasure& d, const Integrand& f,
                                       double lo, double hi) {
  if (hi <= lo) return 0.0;
  if (std::isinf(hi)) {
    const double start = std::max(lo, 0.0);
    const QuadratureResult r = integrate_to_infinity(f, start);
    if (!r.converged) return std::nullopt;
    return r.value;
  }
  const QuadratureResult r = integrate(f, lo, hi);
  if (!r.converged) return std::nullopt;
  return r.value;
  (void)d;
}

}  // namespace

std::optional<double> total_mass(const Measure& mu) {
  if (is_atomic(mu)) return as_atomic(mu).total_mass();
  const DensityMeasure& d = as_density(mu);
  return density_integral(d, [&d](double x) { return d(x); },
                          d.support_lower(), d.support_upper());
}

std::optional<double> inverse_second_moment(const Measure& mu) {
  if (is_atomic(mu)) return as_atomic(mu).inverse_second_moment();
  const DensityMeasure& d = as_density(mu);
  return density_integral(d, [&d](double x) { return d(x) / (x * x); },
                          d.support_lower(), d.support_upper());
}

std::optional<double> laplace_transform(const Measure& mu, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("laplace_transform needs t > 0");
  if (is_atomic(mu)) return as_atomic(mu).laplace_transform(t);
  const DensityMeasure& d = as_density(mu);
  return density_integral(d, [&d, t](double x) { return d(x) * std::exp(-t * x); },
                          d.support_lower(), d.support_upper());
}

double cdf(const Measure& mu, double x) {
  if (x < 0.0) throw std::invalid_argument("cdf needs x >= 0");
  if (is_atomic(mu)) return as_atomic(mu).cdf(x);
  const DensityMeasure& d = as_density(mu);
  const double lo = d.support_lower();
  const double hi = std::min(x, d.support_upper());
  if (hi <= lo) return 0.0;
  const QuadratureResult r = integrate([&d](double y) { return d(y); }, lo, hi);
  return r.value;  // locally finite by construction
}

Measure sharp(const Measure& mu) {
  if (is_atomic(mu)) return as_atomic(mu).sharp();
  return as_density(mu).sharp();
}

Measure scale_mass(const Measure& mu, double tau) {
  if (is_atomic(mu)) return as_atomic(mu).scale_mass(tau);
  return as_density(mu).scale_mass(tau);
}

Measure scale_variable(const Measure& mu, double tau) {
  if (is_atomic(mu)) return as_atomic(mu).scale_variable(tau);
  return as_density(mu).scale_variable(tau);
}

MeasureClass classify(const Measure& mu, const ClassifyOptions& opts) {
  MeasureClass c;
  if (is_atomic(mu)) {
    // Finitely many atoms with positive positions: everything holds, and the
    // Blaschke sum is a finite sum.
    c.is_finite = true;
    c.is_cofinite = true;
    c.is_carleson = true;
    c.bounded_support = true;
    c.blaschke_atomic = true;
    return c;
  }
  const DensityMeasure& d = as_density(mu);
  c.is_finite = total_mass(mu).has_value();
  c.is_cofinite = inverse_second_moment(mu).has_value();
  c.bounded_support = !std::isinf(d.support_upper());
  c.blaschke_atomic = false;

  double worst_ratio = 0.0;
  for (int j = -20; j <= 20; ++j) {
    const double a = std::ldexp(1.0, j);
    const double ratio = cdf(mu, a) / a;
    worst_ratio = std::max(worst_ratio, ratio);
  }
  c.is_carleson = std::isfinite(worst_ratio) && worst_ratio <= opts.carleson_bound;
  return c;
}

double kolmogorov_distance(const Measure& mu1, const Measure& mu2) {
  const auto m1 = total_mass(mu1);
  const auto m2 = total_mass(mu2);
  if (!m1 || !m2)
    throw std::invalid_argument("kolmogorov_distance needs finite total masses");

  std::set<double> points;
  auto add_measure_points = [&points](const Measure& mu) {
    if (is_atomic(mu)) {
      for (const Atom& a : as_atomic(mu).atoms()) points.insert(a.position);
    } else {
      const DensityMeasure& d = as_density(mu);
      const double lo = d.support_lower();
      const double hi = std::isinf(d.support_upper())
                            ? lo + 64.0 * std::max(1.0, lo)
                            : d.support_upper();
      for (int i = 0; i <= 512; ++i)
        points.insert(lo + (hi - lo) * static_cast<double>(i) / 512.0);
    }
  };
  add_measure_points(mu1);
  add_measure_points(mu2);

  auto cdf_left = [](const Measure& mu, double x) {
    if (is_atomic(mu)) {
      double s = 0.0;
      for (const Atom& a : as_atomic(mu).atoms()) {
        if (a.position >= x) break;
        s += a.weight;
      }
      return s;
    }
    return cdf(mu, x);
  };

  double sup = 0.0;
  for (double p : points) {
    sup = std::max(sup, std::abs(cdf(mu1, p) - cdf(mu2, p)));
    sup = std::max(sup, std::abs(cdf_left(mu1, p) - cdf_left(mu2, p)));
  }
  return sup;
}

}  // namespace hankel_spectra
