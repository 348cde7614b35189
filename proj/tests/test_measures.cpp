#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hankel_spectra/measure.hpp"
#include "oracles.hpp"

using namespace hankel_spectra;

namespace {
AtomicMeasure atoms(std::initializer_list<Atom> list) { return AtomicMeasure(std::vector<Atom>(list)); }
}  // namespace

TEST_CASE("atomic measure construction: ordering, merging, validation") {
  const AtomicMeasure m = atoms({{2.0, 1.0}, {1.0, 0.5}, {2.0, 3.0}});
  REQUIRE(m.size() == 2);
  CHECK(m[0].position == 1.0);
  CHECK(m[1].position == 2.0);
  CHECK(m[1].weight == 4.0);  // coincident atoms merged by summing

  CHECK_THROWS_AS(atoms({{-1.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(atoms({{1.0, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(AtomicMeasure(std::vector<Atom>{}), std::invalid_argument);
}

TEST_CASE("total mass") {
  CHECK(*total_mass(atoms({{1.0, 1.0}})) == 1.0);
  const auto exp_mass = total_mass(DensityMeasure::exp_scale(2.0));
  REQUIRE(exp_mass.has_value());
  CHECK(*exp_mass == doctest::Approx(0.5).epsilon(1e-10));
  // quadrature oracle for the same value
  const double simpson = oracles::simpson([](double x) { return std::exp(-2.0 * x); }, 0.0, 40.0, 40000);
  CHECK(*exp_mass == doctest::Approx(simpson).epsilon(1e-10));

  CHECK_FALSE(total_mass(DensityMeasure::indicator(0.5, INFINITY)).has_value());
}

TEST_CASE("inverse second moment") {
  CHECK(*inverse_second_moment(atoms({{2.0, 3.0}})) == doctest::Approx(0.75));
  CHECK(*inverse_second_moment(atoms({{1.0, 1.0}})) == doctest::Approx(1.0));
  const auto ind = inverse_second_moment(DensityMeasure::indicator(0.5, INFINITY));
  REQUIRE(ind.has_value());
  CHECK(*ind == doctest::Approx(2.0).epsilon(1e-9));
  // diverges at the origin for exp_scale
  CHECK_FALSE(inverse_second_moment(DensityMeasure::exp_scale(2.0)).has_value());
}

TEST_CASE("laplace transform") {
  CHECK(*laplace_transform(DensityMeasure::exp_scale(2.0), 1.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  const double alpha = 0.7;
  for (double t : {0.5, 1.0, 4.0}) {
    CHECK(*laplace_transform(atoms({{alpha, 1.0}}), t) ==
          doctest::Approx(std::exp(-alpha * t)).epsilon(1e-15));
  }
  CHECK(*laplace_transform(DensityMeasure::indicator(0.5, INFINITY), 2.0) ==
        doctest::Approx(std::exp(-1.0) / 2.0).epsilon(1e-10));
  CHECK_THROWS_AS(laplace_transform(atoms({{1.0, 1.0}}), 0.0), std::invalid_argument);
}

TEST_CASE("cdf") {
  const AtomicMeasure m = atoms({{1.0, 2.0}});
  CHECK(cdf(Measure(m), 0.5) == 0.0);
  CHECK(cdf(Measure(m), 1.0) == 2.0);  // atom included, right-continuous
  CHECK(cdf(Measure(DensityMeasure::exp_scale(2.0)), 50.0) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("sharp involution") {
  const AtomicMeasure m = atoms({{2.0, 3.0}});
  const AtomicMeasure s = m.sharp();
  CHECK(s[0].position == doctest::Approx(0.5).epsilon(1e-16));
  CHECK(s[0].weight == doctest::Approx(0.75).epsilon(1e-16));

  const AtomicMeasure fixed = atoms({{1.0, 1.0}}).sharp();
  CHECK(fixed[0].position == 1.0);
  CHECK(fixed[0].weight == 1.0);

  const DensityMeasure half_line = DensityMeasure::indicator(0.5, INFINITY);
  const DensityMeasure flipped = half_line.sharp();
  CHECK(flipped.kind() == DensityKind::indicator);
  CHECK(flipped.support_lower() == 0.0);
  CHECK(flipped.support_upper() == 2.0);
  CHECK(flipped(1.0) == 1.0);
  CHECK(flipped(3.0) == 0.0);
}

TEST_CASE("sharp on a generic density is w(1/x)dx") {
  const DensityMeasure e2 = DensityMeasure::exp_scale(2.0);
  const DensityMeasure s = e2.sharp();
  for (double x : {0.25, 1.0, 4.0}) {
    CHECK(s(x) == doctest::Approx(std::exp(-2.0 / x)).epsilon(1e-15));
  }
  // sharp is an involution on the representation too
  const DensityMeasure back = s.sharp();
  for (double x : {0.25, 1.0, 4.0}) {
    CHECK(back(x) == doctest::Approx(e2(x)).epsilon(1e-15));
  }
  // mass of mu^# equals the inverse second moment of mu: for indicator(1/2,inf)
  CHECK(*total_mass(DensityMeasure::indicator(0.5, INFINITY).sharp()) ==
        doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("scalings") {
  const AtomicMeasure unit = atoms({{1.0, 1.0}});
  CHECK(unit.scale_mass(2.0)[0].weight == 2.0);
  CHECK(unit.scale_variable(3.0)[0].position == 3.0);

  const DensityMeasure scaled = DensityMeasure::exp_scale(2.0).scale_variable(2.0);
  CHECK(*total_mass(scaled) == doctest::Approx(0.5).epsilon(1e-9));
  for (double x : {0.5, 1.0, 2.0}) {
    CHECK(scaled(x) == doctest::Approx(0.5 * std::exp(-x)).epsilon(1e-15));
  }
}

TEST_CASE("classification") {
  const MeasureClass lebesgue = classify(Measure(DensityMeasure::indicator(0.0, INFINITY)));
  CHECK(lebesgue.is_carleson);
  CHECK_FALSE(lebesgue.is_finite);
  CHECK_FALSE(lebesgue.is_cofinite);
  CHECK_FALSE(lebesgue.bounded_support);

  const MeasureClass two_atoms = classify(Measure(atoms({{1.0, 1.0}, {2.0, 1.0}})));
  CHECK(two_atoms.is_finite);
  CHECK(two_atoms.is_cofinite);
  CHECK(two_atoms.blaschke_atomic);
  CHECK(two_atoms.is_carleson);
  CHECK(two_atoms.bounded_support);

  const MeasureClass exp2 = classify(Measure(DensityMeasure::exp_scale(2.0)));
  CHECK(exp2.is_finite);
  CHECK_FALSE(exp2.is_cofinite);
  CHECK_FALSE(exp2.blaschke_atomic);
}

TEST_CASE("kolmogorov distance") {
  const Measure d1 = Measure(atoms({{1.0, 1.0}}));
  const Measure d2 = Measure(atoms({{2.0, 1.0}}));
  const Measure d11 = Measure(atoms({{1.1, 1.0}}));
  CHECK(kolmogorov_distance(d1, d1) == 0.0);
  CHECK(kolmogorov_distance(d1, d2) == doctest::Approx(1.0));
  // not a weak-convergence metric for atoms: nearby atoms stay at distance 1
  CHECK(kolmogorov_distance(d1, d11) == doctest::Approx(1.0));
  CHECK_THROWS_AS(kolmogorov_distance(d1, Measure(DensityMeasure::indicator(0.5, INFINITY))),
                  std::invalid_argument);
}

TEST_CASE("property: sharp is an involution and swaps mass with the inverse second moment") {
  oracles::MeasureGen gen(2026);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = gen.uniform_int(1, 12);
    const AtomicMeasure mu(gen.log_uniform_nodes(n, 1e-3, 1e3), gen.uniform(n, 0.1, 10.0));
    const AtomicMeasure twice = mu.sharp().sharp();
    REQUIRE(twice.size() == mu.size());
    for (std::size_t k = 0; k < mu.size(); ++k) {
      CHECK(twice[k].position ==
            doctest::Approx(mu[k].position).epsilon(1e-15));
      CHECK(twice[k].weight == doctest::Approx(mu[k].weight).epsilon(1e-15));
    }
    CHECK(mu.sharp().total_mass() ==
          doctest::Approx(mu.inverse_second_moment()).epsilon(1e-14));
  }
}

TEST_CASE("property: laplace transform decreases in t and is dominated by the mass") {
  oracles::MeasureGen gen(7);
  const int n = 8;
  const AtomicMeasure mu(gen.log_uniform_nodes(n, 0.1, 10.0), gen.uniform(n, 0.1, 10.0));
  double prev = mu.total_mass();
  for (double t : {0.1, 0.5, 1.0, 2.0, 5.0, 20.0}) {
    const double h = mu.laplace_transform(t);
    CHECK(h <= prev);
    CHECK(h <= mu.total_mass());
    prev = h;
  }
}

TEST_CASE("property: cdf is nondecreasing and exhausts the mass at the top atom") {
  oracles::MeasureGen gen(11);
  const int n = 10;
  const AtomicMeasure mu(gen.log_uniform_nodes(n, 0.1, 10.0), gen.uniform(n, 0.1, 10.0));
  double prev = 0.0;
  for (double x = 0.0; x < 12.0; x += 0.25) {
    const double v = mu.cdf(x);
    CHECK(v >= prev);
    prev = v;
  }
  CHECK(mu.cdf(mu.atoms().back().position) == doctest::Approx(mu.total_mass()).epsilon(1e-15));
}

TEST_CASE("property: scale_variable round trip is exact to rounding") {
  oracles::MeasureGen gen(13);
  const int n = 6;
  const AtomicMeasure mu(gen.log_uniform_nodes(n, 0.1, 10.0), gen.uniform(n, 0.1, 10.0));
  for (double tau : {0.3, 2.0, 17.5}) {
    const AtomicMeasure back = mu.scale_variable(tau).scale_variable(1.0 / tau);
    for (std::size_t k = 0; k < mu.size(); ++k) {
      CHECK(back[k].position == doctest::Approx(mu[k].position).epsilon(1e-15));
      CHECK(back[k].weight == mu[k].weight);
    }
  }
}
