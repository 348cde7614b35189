#include <doctest.h>

#include <cmath>

#include "hankel_spectra/quadrature.hpp"
#include "oracles.hpp"

using namespace hankel_spectra;

TEST_CASE("adaptive rule on smooth finite integrands") {
  const auto r = integrate([](double x) { return x * x; }, 0.0, 1.0);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  const auto osc = integrate([](double x) { return std::sin(10.0 * x); }, 0.0, M_PI);
  CHECK(osc.converged);
  CHECK(osc.value == doctest::Approx((1.0 - std::cos(10.0 * M_PI)) / 10.0).epsilon(1e-12));
}

TEST_CASE("integrable log singularity converges") {
  const auto r = integrate([](double x) { return std::log(1.0 / x); }, 0.0, 1.0);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("semi-infinite integral of exponential") {
  const auto r = integrate_to_infinity([](double x) { return std::exp(-2.0 * x); }, 0.0);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("divergent integrals are flagged, not returned as inf") {
  const auto flat = integrate_to_infinity([](double) { return 1.0; }, 0.5);
  CHECK_FALSE(flat.converged);

  const auto endpoint = integrate([](double x) { return 1.0 / (x * x); }, 0.0, 1.0);
  CHECK_FALSE(endpoint.converged);
}

TEST_CASE("gauss-legendre nodes: 2-point rule on [0,2]") {
  std::vector<double> x, w;
  gauss_legendre(2, 0.0, 2.0, x, w);
  CHECK(x[0] == doctest::Approx(1.0 - 1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(x[1] == doctest::Approx(1.0 + 1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(w[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(w[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("gauss-legendre: 1-point rule is the midpoint") {
  std::vector<double> x, w;
  gauss_legendre(1, 3.0, 7.0, x, w);
  CHECK(x[0] == doctest::Approx(5.0));
  CHECK(w[0] == doctest::Approx(4.0));
}

TEST_CASE("gauss-legendre rules integrate polynomials of degree 2n-1 exactly") {
  for (int n : {3, 8, 33, 64}) {
    std::vector<double> x, w;
    gauss_legendre(n, -1.0, 1.0, x, w);
    double mass = 0.0;
    for (double v : w) mass += v;
    CHECK(mass == doctest::Approx(2.0).epsilon(1e-14));
    // odd powers vanish on [-1,1]; check x^{2n-2}
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += w[i] * std::pow(x[i], 2 * n - 2);
    CHECK(s == doctest::Approx(2.0 / (2 * n - 1)).epsilon(1e-12));
  }
}

TEST_CASE("adaptive rule agrees with the simpson oracle on a generic integrand") {
  auto f = [](double x) { return std::exp(-x) * std::cos(3.0 * x); };
  const auto r = integrate(f, 0.0, 5.0);
  const double oracle = oracles::simpson(f, 0.0, 5.0, 200000);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(oracle).epsilon(1e-10));
}
