#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "diskmod/modules.hpp"

using namespace diskmod;

static SampledFunction random_positive(const CircleGrid& g, std::mt19937_64& rng,
                                       int max_mode) {
  std::normal_distribution<double> gauss;
  std::vector<double> a(max_mode + 1), b(max_mode + 1);
  double bound = 0.0;
  for (int k = 1; k <= max_mode; ++k) {
    a[k] = gauss(rng);
    b[k] = gauss(rng);
    bound += std::abs(a[k]) + std::abs(b[k]);
  }
  return SampledFunction::from_fn(g, [&](double t) {
    double s = bound + 1.0;
    for (int k = 1; k <= max_mode; ++k)
      s += a[k] * std::cos(k * t) + b[k] * std::sin(k * t);
    return cplx(s);
  });
}

TEST_CASE("module norm multiplies sup of |a| f") {
  CircleGrid g(256);
  SampledFunction f =
      SampledFunction::from_fn(g, [](double t) { return 2.0 + std::cos(t); });
  FunctionModule M{f, SubalgebraDescriptor::full()};
  CHECK(module_norm(AnalyticElement({cplx(1.0)}), M) == doctest::Approx(3.0));
  // |z| = 1 on the boundary, so z has the same module norm as 1.
  CHECK(module_norm(AnalyticElement::monomial(1), M) == doctest::Approx(3.0));
}

TEST_CASE("module norm enforces two point membership") {
  CircleGrid g(256);
  SampledFunction f = SampledFunction::constant(g, 1.0);
  FunctionModule M{f, SubalgebraDescriptor::two_point(DiskPoint(0.5, 0.0),
                                                      DiskPoint(-0.5, 0.0))};
  CHECK_THROWS_AS(module_norm(AnalyticElement::monomial(1), M), NotInSubalgebra);
  CHECK(module_norm(AnalyticElement::monomial(2), M) == doctest::Approx(1.0));
}

TEST_CASE("equivalent weights are decided isometric with a witness") {
  CircleGrid g(1024);
  SampledFunction f1 = SampledFunction::from_fn(
      g, [](double t) { return std::abs(2.0 + std::polar(1.0, t)); });
  SampledFunction f2 = SampledFunction::constant(g, 1.0);
  FunctionModule M1{f1, SubalgebraDescriptor::full()};
  FunctionModule M2{f2, SubalgebraDescriptor::full()};
  IsometryDecision d = decide_isometric(M1, M2);
  REQUIRE(d.verdict == IsometryVerdict::ISOMETRIC);
  REQUIRE(d.witness.has_value());
  // The witness for |2 + z| over 1 is 2 + z itself up to rotation.
  CHECK(std::abs(std::abs(d.witness->evaluate(DiskPoint(0.0, 0.0))) - 2.0) < 1e-6);
  CHECK(d.residual < 1e-6);
}

TEST_CASE("isometry decision is witnessed by canonical isometry norms") {
  CircleGrid g(512);
  std::mt19937_64 rng(61);
  SampledFunction f1 = random_positive(g, rng, 5);
  SampledFunction f2 = random_positive(g, rng, 5);
  FunctionModule M1{f1, SubalgebraDescriptor::full()};
  FunctionModule M2{f2, SubalgebraDescriptor::full()};
  IsometryDecision d = decide_isometric(M1, M2);
  REQUIRE(d.verdict == IsometryVerdict::ISOMETRIC);

  ModuleMap map{MobiusMap::identity(), *d.witness};
  CanonicalIsometry T = build_canonical_isometry(M1, M2, map);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<cplx> c(8);
    for (cplx& v : c) v = cplx(gauss(rng), gauss(rng));
    AnalyticElement a(c);
    SampledFunction Ta = resample(T.apply(a), 4);
    double lhs = Ta.max_abs();
    CHECK(lhs == doctest::Approx(module_norm(a, M1)).epsilon(1e-6));
  }
}

TEST_CASE("canonical isometry rejects non invertible multipliers") {
  CircleGrid g(256);
  SampledFunction f = SampledFunction::constant(g, 1.0);
  FunctionModule M{f, SubalgebraDescriptor::full()};
  ModuleMap bad{MobiusMap::identity(), AnalyticElement::monomial(1)};
  CHECK_THROWS_AS(build_canonical_isometry(M, M, bad), NotInvertible);
}

TEST_CASE("tensor weight is the pointwise product") {
  CircleGrid g(256);
  SampledFunction f1 =
      SampledFunction::from_fn(g, [](double t) { return 2.0 + std::cos(t); });
  SampledFunction f2 =
      SampledFunction::from_fn(g, [](double t) { return 3.0 + std::sin(t); });
  FunctionModule M1{f1, SubalgebraDescriptor::full()};
  FunctionModule M2{f2, SubalgebraDescriptor::full()};
  FunctionModule M12 = tensor_weight(M1, M2);
  for (int j = 0; j < g.n; ++j)
    CHECK(M12.weight.values[j].real() ==
          doctest::Approx(f1.values[j].real() * f2.values[j].real()));
}

TEST_CASE("rank one equivalence witness certifies smooth weights") {
  CircleGrid g(1024);
  SampledFunction f =
      SampledFunction::from_fn(g, [](double t) { return std::exp(std::cos(t)); });
  FunctionModule M{f, SubalgebraDescriptor::full()};
  VerificationReport rep = rank1_morita_check(M);
  CHECK(rep.pass);
  CHECK(rep.measurements.at("eps") < 1e-4);
}

TEST_CASE("picard decomposition stores the mobius part verbatim") {
  CircleGrid g(512);
  SampledFunction f =
      SampledFunction::from_fn(g, [](double t) { return 2.0 + std::cos(t); });
  FunctionModule M{f, SubalgebraDescriptor::full()};
  MobiusMap phi{DiskPoint(0.3, 0.1), cplx(0.0, 1.0)};
  PicardDecomposition d = picard_decompose(M, phi);
  CHECK(d.element.mobius.a.z == phi.a.z);
  CHECK(d.element.mobius.lambda == phi.lambda);
  CHECK(d.diagnostics.heuristic);
  CHECK_FALSE(d.diagnostics.rough);
}

TEST_CASE("picard roughness flag fires on lacunary log weights") {
  CircleGrid g(1024);
  SampledFunction f = SampledFunction::from_fn(g, [](double t) {
    double u = 0.0;
    for (int k = 1; k <= 256; k *= 2) u += std::cos(k * t);
    return std::exp(0.5 * u);
  });
  FunctionModule M{f, SubalgebraDescriptor::full()};
  PicardDecomposition d = picard_decompose(M, MobiusMap::identity());
  CHECK(d.diagnostics.rough);
}

TEST_CASE("composition with a mobius map keeps the disk algebra") {
  std::mt19937_64 rng(67);
  std::normal_distribution<double> gauss;
  std::vector<cplx> c(10);
  for (cplx& v : c) v = cplx(gauss(rng), gauss(rng));
  AnalyticElement a(c);
  MobiusMap phi{DiskPoint(0.4, -0.2), cplx(1.0)};
  bool warn = true;
  AnalyticElement comp = compose_with_mobius(a, phi, RunConfig{}, &warn);
  CHECK_FALSE(warn);
  for (const DiskPoint& z : interior_test_lattice())
    CHECK(std::abs(comp.evaluate(z) - a.evaluate(DiskPoint(phi.apply(z.z)))) <
          1e-7);
}
