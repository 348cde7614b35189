#include "hankel_spectra/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace hankel_spectra {

namespace {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule
// (QUADPACK dqk15 constants), on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
  double value;
  double error;
};

PanelEstimate gk15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double result_gauss = kWg[3] * fc;
  double result_kronrod = kWgk[7] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    result_kronrod += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) result_gauss += kWg[j / 2] * (f1 + f2);
  }
  result_gauss *= half;
  result_kronrod *= half;

  // |K15 - G7| overestimates the Kronrod error for smooth panels, which is
  // the safe direction for the global bound.
  return {result_kronrod, std::abs(result_kronrod - result_gauss)};
}

struct Interval {
  double a, b, value, error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureOptions& opts) {
  if (!(a < b)) return {0.0, 0.0, true};

  std::priority_queue<Interval> heap;
  PanelEstimate first = gk15(f, a, b);
  heap.push({a, b, first.value, first.error});
  double total = first.value;
  double total_err = first.error;

  std::size_t splits = 0;
  while (total_err > std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) {
    if (splits >= opts.max_intervals || heap.empty()) {
      return {total, total_err, false};
    }
    const Interval worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval can no longer be split in floating point; accept it.
      total_err -= worst.error;
      continue;
    }
    const PanelEstimate left = gk15(f, worst.a, mid);
    const PanelEstimate right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push({worst.a, mid, left.value, left.error});
    heap.push({mid, worst.b, right.value, right.error});
    ++splits;
    if (!std::isfinite(total)) return {total, total_err, false};
  }
  return {total, total_err, true};
}

QuadratureResult integrate_to_infinity(const Integrand& f, double a,
                                       const QuadratureOptions& opts) {
  // Panels [a, 2a], [2a, 4a], ... (shifted to start at 1 when a is tiny).
  double lo = a;
  double width = std::max(a, 1.0);
  double total = 0.0;
  double total_err = 0.0;
  double prev_contrib = std::numeric_limits<double>::infinity();
  int growing_streak = 0;

  QuadratureOptions panel_opts = opts;
  panel_opts.max_intervals = std::max<std::size_t>(1024, opts.max_intervals / 256);

  for (int panel = 0; panel < 2048; ++panel) {
    const double hi = lo + width;
    const QuadratureResult part = integrate(f, lo, hi, panel_opts);
    if (!part.converged) return {total + part.value, total_err + part.error_estimate, false};
    total += part.value;
    total_err += part.error_estimate;
    const double contrib = std::abs(part.value);
    const double cutoff = std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
    if (contrib < cutoff && panel > 0) {
      return {total, total_err + contrib, true};
    }
    if (contrib >= prev_contrib) {
      if (++growing_streak >= 24) return {total, total_err, false};
    } else {
      growing_streak = 0;
    }
    if (!std::isfinite(total) || std::abs(total) > 1e300) return {total, total_err, false};
    prev_contrib = contrib;
    lo = hi;
    width *= 2.0;
  }
  return {total, total_err, false};
}

void gauss_legendre(int n, double a, double b,
                    std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  // Newton iteration on P_n, symmetric pairs only.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      if (n == 1) p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double pn = (n == 1) ? x : p1;
      const double pn1 = (n == 1) ? 1.0 : p0;
      pp = n * (x * pn - pn1) / (x * x - 1.0);
      const double dx = pn / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    nodes[i] = mid - half * x;
    nodes[n - 1 - i] = mid + half * x;
    weights[i] = half * w;
    weights[n - 1 - i] = half * w;
  }
  if (n == 1) {
    nodes[0] = mid;
    weights[0] = b - a;
  }
}

}  // namespace hankel_spectra
