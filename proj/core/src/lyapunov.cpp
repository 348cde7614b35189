#include "hankel_spectra/lyapunov.hpp"

#include <cmath>
#include <stdexcept>

namespace hankel_spectra {

namespace {
void validate(const DiagonalSystem& sys) {
  if (sys.a.size() != sys.b.size())
    throw std::invalid_argument("diagonal system needs |a| == |b|");
  if (sys.a.empty()) throw std::invalid_argument("diagonal system must be nonempty");
  for (double ai : sys.a) {
    if (!(ai > 0.0)) throw std::invalid_argument("diagonal of A must be positive");
  }
}
}  // namespace

DenseMatrix solve_lyapunov(const DiagonalSystem& sys) {
  validate(sys);
  const std::size_t n = sys.a.size();
  DenseMatrix w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      w(i, j) = sys.b[i] * sys.b[j] / (sys.a[i] + sys.a[j]);
  return w;
}

double lyapunov_residual(const DiagonalSystem& sys, const DenseMatrix& w) {
  validate(sys);
  const std::size_t n = sys.a.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      worst = std::max(worst,
                       std::abs(sys.a[i] * w(i, j) + w(i, j) * sys.a[j] - sys.b[i] * sys.b[j]));
  return worst;
}

GramianResult gramian_quadrature(const DiagonalSystem& sys, double T, int steps,
                                 double tail_tol) {
  validate(sys);
  if (!(T > 0.0)) throw std::invalid_argument("gramian quadrature needs T > 0");
  if (steps < 2) throw std::invalid_argument("gramian quadrature needs steps >= 2");
  if (steps % 2 != 0) ++steps;  // Simpson wants an even panel count

  const std::size_t n = sys.a.size();
  GramianResult out;
  out.w = DenseMatrix(n, n);
  const double h = T / steps;

  // Entrywise Simpson over the rank-one integrand b_i b_j e^{-t(a_i+a_j)}.
  for (int s = 0; s <= steps; ++s) {
    const double t = h * s;
    const double coef = (s == 0 || s == steps) ? 1.0 : (s % 2 == 1 ? 4.0 : 2.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double ei = sys.b[i] * std::exp(-t * sys.a[i]);
      for (std::size_t j = 0; j <= i; ++j) {
        const double ej = sys.b[j] * std::exp(-t * sys.a[j]);
        out.w(i, j) += coef * ei * ej;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      out.w(i, j) *= h / 3.0;
      out.w(j, i) = out.w(i, j);
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const double rate = sys.a[i] + sys.a[j];
      out.tail_bound = std::max(out.tail_bound,
                                sys.b[i] * sys.b[j] * std::exp(-T * rate) / rate);
    }
  out.tail_ok = out.tail_bound <= tail_tol;
  return out;
}

double impulse_response(const DiagonalSystem& sys, double t) {
  validate(sys);
  if (t < 0.0) throw std::invalid_argument("impulse response needs t >= 0");
  double s = 0.0;
  for (std::size_t i = 0; i < sys.a.size(); ++i)
    s += sys.b[i] * sys.b[i] * std::exp(-t * sys.a[i]);
  return s;
}

}  // namespace hankel_spectra
