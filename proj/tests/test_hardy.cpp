#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "diskmod/hardy.hpp"

using namespace diskmod;

static SampledFunction random_real(const CircleGrid& g, std::mt19937_64& rng,
                                   int max_mode) {
  std::normal_distribution<double> gauss;
  std::vector<double> a(max_mode + 1), b(max_mode + 1);
  for (int k = 0; k <= max_mode; ++k) {
    a[k] = gauss(rng);
    b[k] = gauss(rng);
  }
  return SampledFunction::from_fn(g, [&](double t) {
    double s = a[0];
    for (int k = 1; k <= max_mode; ++k)
      s += a[k] * std::cos(k * t) + b[k] * std::sin(k * t);
    return cplx(s);
  });
}

TEST_CASE("conjugate of cos is sin") {
  CircleGrid g(256);
  SampledFunction u = SampledFunction::from_fn(
      g, [](double t) { return cplx(std::cos(3.0 * t)); });
  SampledFunction v = conjugate(u);
  for (int j = 0; j < g.n; ++j)
    CHECK(v.values[j].real() == doctest::Approx(std::sin(3.0 * g.theta(j))).epsilon(1e-12));
}

TEST_CASE("conjugate is an involution up to sign and mean") {
  CircleGrid g(512);
  std::mt19937_64 rng(3);
  SampledFunction u = random_real(g, rng, 40);
  SampledFunction uu = conjugate(conjugate(u));
  double mean = u.mean().real();
  for (int j = 0; j < g.n; ++j)
    CHECK(uu.values[j].real() ==
          doctest::Approx(-(u.values[j].real() - mean)).epsilon(1e-10));
}

TEST_CASE("conjugate rejects complex input") {
  CircleGrid g(64);
  SampledFunction f = SampledFunction::from_fn(
      g, [](double t) { return std::polar(1.0, t); });
  CHECK_THROWS_AS(conjugate(f), InvalidInput);
}

TEST_CASE("poisson extension satisfies the mean value property") {
  CircleGrid g(512);
  std::mt19937_64 rng(5);
  SampledFunction u = random_real(g, rng, 30);
  HarmonicExtension h = make_harmonic_extension(u);
  DiskPoint center(0.3, -0.2);
  cplx m = mean_on_circle(
      [&](cplx z) { return cplx(h.evaluator(DiskPoint(z))); }, center, 0.25);
  CHECK(std::abs(m.real() - h.evaluator(center)) < 1e-8);
}

TEST_CASE("poisson extension respects the maximum principle") {
  CircleGrid g(256);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    SampledFunction u = random_real(g, rng, 20);
    HarmonicExtension h = make_harmonic_extension(u);
    double lo = u.min_real(), hi = u.max_real();
    std::uniform_real_distribution<double> rad(0.0, 0.95), ang(0.0, kTwoPi);
    for (int i = 0; i < 50; ++i) {
      double v = h.evaluator(DiskPoint(std::polar(rad(rng), ang(rng))));
      CHECK(v >= lo - 1e-8);
      CHECK(v <= hi + 1e-8);
    }
  }
}

TEST_CASE("herglotz refuses boundary evaluation") {
  CircleGrid g(64);
  SampledFunction u = SampledFunction::constant(g, 1.0);
  CHECK_THROWS_AS(herglotz(u, DiskPoint(1.0, 0.0)), BoundaryEvaluation);
}

TEST_CASE("outer boundary reproduces the prescribed modulus") {
  CircleGrid g(512);
  std::mt19937_64 rng(13);
  SampledFunction u = random_real(g, rng, 25);
  SampledFunction phi = outer_boundary(u);
  for (int j = 0; j < g.n; ++j)
    CHECK(std::abs(phi.values[j]) ==
          doctest::Approx(std::exp(u.values[j].real())).epsilon(1e-9));
}

TEST_CASE("outer boundary of a constant log is the constant") {
  CircleGrid g(64);
  SampledFunction u = SampledFunction::constant(g, 0.5);
  SampledFunction phi = outer_boundary(u);
  for (int j = 0; j < g.n; ++j)
    CHECK(std::abs(phi.values[j] - std::exp(0.5)) < 1e-12);
}

TEST_CASE("outer functions multiply when logs add") {
  CircleGrid g(512);
  std::mt19937_64 rng(17);
  SampledFunction u1 = random_real(g, rng, 15);
  SampledFunction u2 = random_real(g, rng, 15);
  SampledFunction p1 = outer_boundary(u1);
  SampledFunction p2 = outer_boundary(u2);
  SampledFunction p12 = outer_boundary(u1.pointwise_add(u2).real_part());
  for (int j = 0; j < g.n; ++j)
    CHECK(std::abs(p12.values[j] - p1.values[j] * p2.values[j]) <
          1e-10 * (1.0 + std::abs(p12.values[j])));
}

TEST_CASE("outer boundary output is analytic") {
  CircleGrid g(1024);
  std::mt19937_64 rng(19);
  SampledFunction u = random_real(g, rng, 10).scaled(0.25).real_part();
  CHECK(negative_frequency_energy_fraction(outer_boundary(u)) < 1e-12);
}

TEST_CASE("log integrability flags the hard zero and accepts the soft one") {
  CircleGrid g(1024);
  SampledFunction soft = SampledFunction::from_fn(
      g, [](double t) { return std::abs(1.0 + std::polar(1.0, t)); });
  CHECK(log_integrability(soft, {5, 10, 15, 20}).verdict ==
        LogIntegrabilityVerdict::INTEGRABLE);

  // A weight vanishing on a whole arc is not log-integrable.
  SampledFunction fat = SampledFunction::from_fn(g, [](double t) {
    double d = std::abs(t - kPi);
    return cplx(d < 0.5 ? 0.0 : 1.0);
  });
  CHECK(log_integrability(fat, {5, 10, 15, 20}).verdict ==
        LogIntegrabilityVerdict::DIVERGENT_SUSPECTED);

  SampledFunction zero = SampledFunction::constant(g, 0.0);
  CHECK_THROWS_AS(log_integrability(zero, {5, 10}), AllZero);
}
