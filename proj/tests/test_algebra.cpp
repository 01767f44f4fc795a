#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "diskmod/algebra.hpp"

using namespace diskmod;

static AnalyticElement random_element(std::mt19937_64& rng, int degree) {
  std::normal_distribution<double> gauss;
  std::vector<cplx> c(degree + 1);
  for (cplx& v : c) v = cplx(gauss(rng), gauss(rng));
  return AnalyticElement(std::move(c));
}

TEST_CASE("evaluation matches the explicit polynomial") {
  AnalyticElement a({cplx(1.0), cplx(2.0), cplx(0.0, 3.0)});
  DiskPoint z(0.4, -0.1);
  cplx expect = 1.0 + 2.0 * z.z + cplx(0.0, 3.0) * z.z * z.z;
  CHECK(std::abs(a.evaluate(z) - expect) < 1e-14);
}

TEST_CASE("product and sum agree with pointwise arithmetic") {
  std::mt19937_64 rng(23);
  AnalyticElement a = random_element(rng, 7);
  AnalyticElement b = random_element(rng, 5);
  DiskPoint z(0.6, 0.2);
  CHECK(std::abs((a * b).evaluate(z) - a.evaluate(z) * b.evaluate(z)) < 1e-12);
  CHECK(std::abs((a + b).evaluate(z) - (a.evaluate(z) + b.evaluate(z))) < 1e-12);
  CHECK(std::abs((a - b).evaluate(z) - (a.evaluate(z) - b.evaluate(z))) < 1e-12);
}

TEST_CASE("boundary_on is exact on coarse grids") {
  std::mt19937_64 rng(29);
  AnalyticElement a = random_element(rng, 100);
  CircleGrid coarse(32);
  SampledFunction b = boundary_on(a, coarse);
  for (int j = 0; j < coarse.n; ++j)
    CHECK(std::abs(b.values[j] - a.evaluate(DiskPoint(coarse.point(j)))) < 1e-10);
}

TEST_CASE("projection recovers a polynomial from boundary samples") {
  std::mt19937_64 rng(31);
  AnalyticElement a = random_element(rng, 20);
  CircleGrid g(128);
  double leak = 1.0;
  AnalyticElement back = project_to_analytic(a.boundary_samples(g), 20, &leak);
  CHECK(leak < 1e-24);
  for (int k = 0; k <= 20; ++k)
    CHECK(std::abs(back.coeffs[k] - a.coeffs[k]) < 1e-12);
}

TEST_CASE("sup norm is submultiplicative for elements") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    AnalyticElement a = random_element(rng, 12);
    AnalyticElement b = random_element(rng, 9);
    CHECK(sup_norm(a * b) <= sup_norm(a) * sup_norm(b) * (1.0 + 1e-9));
  }
}

TEST_CASE("interior modulus never exceeds the boundary sup") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> len_d(1, 4), deg_d(0, 32);
    std::vector<AnalyticElement> entries;
    int len = len_d(rng);
    for (int i = 0; i < len; ++i) entries.push_back(random_element(rng, deg_d(rng)));
    ATuple t(entries);
    CircleGrid g(256);
    SampledFunction n = tuple_pointwise_norm(t, g);
    double boundary_sup = sup_norm(n, 4);
    for (const DiskPoint& z : interior_test_lattice())
      CHECK(t.norm_at(z) <= boundary_sup + 1e-8);
  }
}

TEST_CASE("tuple dot satisfies Cauchy-Schwarz on the grid") {
  std::mt19937_64 rng(43);
  std::vector<AnalyticElement> he, ke;
  for (int i = 0; i < 3; ++i) {
    he.push_back(random_element(rng, 10));
    ke.push_back(random_element(rng, 10));
  }
  ATuple h(he), k(ke);
  CircleGrid g(128);
  SampledFunction dot = tuple_dot(h, k, g);
  SampledFunction hn = tuple_pointwise_norm(h, g);
  SampledFunction kn = tuple_pointwise_norm(k, g);
  for (int j = 0; j < g.n; ++j)
    CHECK(std::abs(dot.values[j]) <=
          hn.values[j].real() * kn.values[j].real() + 1e-12);
}

TEST_CASE("invertibility certificate matches winding facts") {
  AnalyticElement shifted({cplx(2.0), cplx(1.0)});  // 2 + z
  InvertibilityResult r = is_invertible(shifted);
  CHECK(r.invertible);
  CHECK(r.margin == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.winding == 0);

  AnalyticElement zmon = AnalyticElement::monomial(1);  // z has a zero inside
  InvertibilityResult rz = is_invertible(zmon);
  CHECK_FALSE(rz.invertible);
  CHECK(rz.winding == 1);

  AnalyticElement vanishing({cplx(1.0), cplx(1.0)});  // 1 + z hits zero
  CHECK_FALSE(is_invertible(vanishing).invertible);
}

TEST_CASE("two point membership detects the constraint") {
  SubalgebraDescriptor s =
      SubalgebraDescriptor::two_point(DiskPoint(0.5, 0.0), DiskPoint(-0.5, 0.0));
  AnalyticElement sq = AnalyticElement::monomial(2);  // z^2 agrees at +-0.5
  CHECK(belongs_to_subalgebra(sq, s));
  AnalyticElement lin = AnalyticElement::monomial(1);
  CHECK_FALSE(belongs_to_subalgebra(lin, s));

  std::mt19937_64 rng(47);
  AnalyticElement a = random_element(rng, 9);
  AnalyticElement proj = constrained_projection(a, s);
  CHECK(belongs_to_subalgebra(proj, s, 1e-9));
}

TEST_CASE("two point descriptor rejects equal points") {
  CHECK_THROWS_AS(
      SubalgebraDescriptor::two_point(DiskPoint(0.3, 0.0), DiskPoint(0.3, 0.0)),
      InvalidInput);
}

TEST_CASE("exp series evaluates the exponential") {
  AnalyticElement e = AnalyticElement::exp_series(cplx(0.0, kPi), 48);
  CHECK(std::abs(e.evaluate(DiskPoint(1.0, 0.0)) - cplx(-1.0)) < 1e-12);
  CHECK(std::abs(e.evaluate(DiskPoint(0.0, 0.0)) - cplx(1.0)) < 1e-15);
}
