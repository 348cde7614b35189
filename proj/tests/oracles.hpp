// Test-side oracles, independent of the library code paths they check.
#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace oracles {

// Composite Simpson; the quadrature oracle for [DERIVED] mass/integral values.
inline double simpson(const std::function<double(double)>& f, double a, double b, int steps) {
  if (steps % 2 != 0) ++steps;
  const double h = (b - a) / steps;
  double s = f(a) + f(b);
  for (int i = 1; i < steps; ++i) s += f(a + h * i) * (i % 2 == 1 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// log|Gamma(z)| by the Stirling series after shifting Re z above 20;
// independent of the Lanczos evaluation in the library.
inline double stirling_log_abs_gamma(double re, double im) {
  // Bernoulli terms B_{2n}/(2n(2n-1))
  static const double kCoef[] = {1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680,
                                 1.0 / 1188, -691.0 / 360360, 1.0 / 156};
  double shift_log = 0.0;  // log|z (z+1) ... (z+m-1)|
  double x = re, y = im;
  while (x < 21.0) {
    shift_log += 0.5 * std::log(x * x + y * y);
    x += 1.0;
  }
  const double r2 = x * x + y * y;
  const double logr = 0.5 * std::log(r2);
  const double arg = std::atan2(y, x);
  // Re log Gamma(z) = (x - 1/2) log|z| - y arg z - x + (1/2) log 2 pi + series
  double value = (x - 0.5) * logr - y * arg - x + 0.5 * std::log(2.0 * M_PI);
  // Re sum c_n / z^{2n-1}
  double zr = x / r2, zi = -y / r2;  // 1/z
  double pr = zr, pi_ = zi;          // z^{-(2n-1)}
  const double sr = zr * zr - zi * zi, si = 2.0 * zr * zi;  // 1/z^2
  for (double c : kCoef) {
    value += c * pr;
    const double npr = pr * sr - pi_ * si;
    pi_ = pr * si + pi_ * sr;
    pr = npr;
  }
  return value - shift_log;
}

// Exact 2x2 spectral data of M = [[1/2,1/3],[1/3,1/4]] with u = (1,1):
// lambda = 3/8 +- sqrt(73)/24, m = (b + lambda - a)^2 / (b^2 + (lambda-a)^2).
struct TwoByTwo {
  double lambda1, lambda2, mass1, mass2;
};
inline TwoByTwo two_by_two() {
  const double root = std::sqrt(73.0) / 24.0;
  const double l1 = 0.375 + root;
  const double l2 = 0.375 - root;
  auto mass = [](double lam) {
    const double a = 0.5, b = 1.0 / 3.0;
    const double num = b + lam - a;
    return num * num / (b * b + (lam - a) * (lam - a));
  };
  return {l1, l2, mass(l1), mass(l2)};
}

// Closed-form Mehler CDF: F(lam) = (v arcsech(v) + asin(v)) / pi, v = lam/pi.
inline double mehler_cdf_closed(double lam) {
  if (lam <= 0.0) return 0.0;
  const double v = std::min(lam / M_PI, 1.0);
  const double arc = v < 1.0 ? std::log((1.0 + std::sqrt(1.0 - v * v)) / v) : 0.0;
  return (v * arc + std::asin(v)) / M_PI;
}

// Deterministic random atomic measures for property runs.
struct MeasureGen {
  std::mt19937_64 rng;
  explicit MeasureGen(std::uint64_t seed) : rng(seed) {}

  std::vector<double> log_uniform_nodes(int n, double lo, double hi) {
    std::uniform_real_distribution<double> d(std::log(lo), std::log(hi));
    std::vector<double> out(n);
    for (double& v : out) v = std::exp(d(rng));
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<double> uniform(int n, double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    std::vector<double> out(n);
    for (double& v : out) v = d(rng);
    return out;
  }
  int uniform_int(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng);
  }
};

}  // namespace oracles
