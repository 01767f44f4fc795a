#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "diskmod/certificates.hpp"

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

TEST_CASE("constant weights have constant witnesses") {
  CircleGrid g(256);
  SampledFunction f = SampledFunction::constant(g, 1.0);
  CHECK(verify_Q(f, AnalyticElement({cplx(1.0)})).pass);
  Certificate cert = generate_Q(f);
  CHECK(cert.achieved.at("residual") < 1e-12);
}

TEST_CASE("strictly positive trig weights admit Q witnesses") {
  CircleGrid g(1024);
  SampledFunction f =
      SampledFunction::from_fn(g, [](double t) { return 2.0 + std::cos(t); });
  Certificate cert = generate_Q(f);
  const AnalyticElement& gwit = cert.stages.front().K.entries.front();
  CHECK(verify_Q(f, gwit).pass);
  CHECK(cert.achieved.at("residual") < 1e-6);
}

TEST_CASE("Q verification rejects mismatched moduli and non-invertibles") {
  CircleGrid g(256);
  SampledFunction f =
      SampledFunction::from_fn(g, [](double t) { return 2.0 + std::cos(t); });
  CHECK_FALSE(verify_Q(f, AnalyticElement({cplx(1.0)})).pass);
  CHECK_FALSE(verify_Q(f, AnalyticElement::monomial(1, 2.0)).pass);
  SampledFunction neg = SampledFunction::constant(g, -1.0);
  CHECK_THROWS_AS(generate_Q(neg), NotStrictlyPositive);
}

TEST_CASE("Q witnesses multiply: the class is a group under products") {
  CircleGrid g(1024);
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    SampledFunction f1 = random_positive(g, rng, 6);
    SampledFunction f2 = random_positive(g, rng, 6);
    Certificate c1 = generate_Q(f1);
    Certificate c2 = generate_Q(f2);
    AnalyticElement g12 = c1.stages.front().K.entries.front() *
                          c2.stages.front().K.entries.front();
    SampledFunction f12 = f1.pointwise_mul(f2).real_part();
    RunConfig cfg;
    cfg.tol.tol_Q = 2e-6;
    CHECK(verify_Q(f12, g12, cfg).pass);
  }
}

TEST_CASE("trivial tight certificate has zero slack") {
  CircleGrid g(256);
  SampledFunction f = SampledFunction::constant(g, 1.0);
  ATuple one(std::vector<AnalyticElement>{AnalyticElement({cplx(1.0)})});
  Certificate cert{ClassTag::M_TIGHT, f, {{1e-12, one, one}},
                   PeakSetSpec::empty_set(), {}};
  VerificationReport rep = verify_M(cert);
  CHECK(rep.pass);
  CHECK(rep.measurements.at("stage0.eta") < 1e-15);
  CHECK(verify_M_alternative(cert).pass);
}

TEST_CASE("tight verification catches broken pairings") {
  CircleGrid g(256);
  SampledFunction f = SampledFunction::constant(g, 1.0);
  ATuple one(std::vector<AnalyticElement>{AnalyticElement({cplx(1.0)})});
  ATuple two(std::vector<AnalyticElement>{AnalyticElement({cplx(2.0)})});
  Certificate cert{ClassTag::M_TIGHT, f, {{1e-12, one, two}},
                   PeakSetSpec::empty_set(), {}};
  CHECK_FALSE(verify_M(cert).pass);
}

TEST_CASE("empty peak set gives a tight certificate for smooth weights") {
  CircleGrid g(1024);
  SampledFunction f =
      SampledFunction::from_fn(g, [](double t) { return std::exp(std::cos(t)); });
  Certificate cert =
      generate_R_certificate(f, PeakSetSpec::empty_set(), {1e-3, 1e-5});
  CHECK(verify_R(cert).pass);
  CHECK(verify_M(cert).pass);
  CHECK(verify_M_alternative(cert).pass);
}

TEST_CASE("envelope certificate for the one-sided zero weight") {
  CircleGrid g(1024);
  SampledFunction f = SampledFunction::from_fn(
      g, [](double t) { return std::abs(1.0 + std::polar(1.0, t)); });
  PeakSetSpec E = PeakSetSpec::points({kPi});
  Certificate cert = generate_R_certificate(f, E, {0.1});
  VerificationReport rep = verify_R(cert);
  for (const std::string& r : rep.reasons) INFO(r);
  CHECK(rep.pass);

  // The witness vanishes where f does.
  const AnalyticElement& k = cert.stages.front().K.entries.front();
  CHECK(std::abs(k.evaluate(DiskPoint(-1.0, 0.0))) < 1e-9);
}

TEST_CASE("envelope certificates multiply across disjoint peak sets") {
  CircleGrid g(1024);
  SampledFunction f1 = SampledFunction::from_fn(
      g, [](double t) { return std::abs(1.0 + std::polar(1.0, t)); });
  SampledFunction f2 = SampledFunction::from_fn(
      g, [](double t) { return std::abs(1.0 - std::polar(1.0, t)); });
  SampledFunction f12 = f1.pointwise_mul(f2).real_part();
  PeakSetSpec E = PeakSetSpec::unite(PeakSetSpec::points({kPi}),
                                     PeakSetSpec::points({0.0}));
  Certificate cert = generate_R_certificate(f12, E, {0.1});
  CHECK(verify_R(cert).pass);
}

TEST_CASE("peak set preconditions are enforced") {
  CircleGrid g(1024);
  SampledFunction f = SampledFunction::from_fn(
      g, [](double t) { return std::abs(1.0 + std::polar(1.0, t)); });
  CHECK_THROWS_AS(generate_R_stage(f, PeakSetSpec::points({kPi}), 0.0),
                  InvalidInput);
  // Declared peak set misses the actual zero.
  CHECK_THROWS_AS(generate_R_stage(f, PeakSetSpec::points({0.5}), 0.1),
                  InvalidInput);
  // Zero on a fat arc is not log integrable.
  SampledFunction fat = SampledFunction::from_fn(g, [](double t) {
    return cplx(std::abs(t - kPi) < 0.4 ? 0.0 : 1.0);
  });
  CHECK_THROWS_AS(
      generate_R_stage(fat, PeakSetSpec{{ArcInterval{kPi - 0.4, kPi + 0.4}}}, 0.1),
      NotLogIntegrable);
}

TEST_CASE("subequivalence accepts modulus-matching tuples without pairing") {
  CircleGrid g(512);
  SampledFunction f =
      SampledFunction::from_fn(g, [](double t) { return 2.0 + std::cos(t); });
  Certificate cert = generate_Q(f);
  const AnalyticElement& gwit = cert.stages.front().K.entries.front();
  const AnalyticElement& hwit = cert.stages.front().H.entries.front();
  ATuple K(std::vector<AnalyticElement>{gwit});
  ATuple H(std::vector<AnalyticElement>{hwit});
  VerificationReport rep = verify_subequivalence(f, H, K);
  CHECK(rep.pass);
  CHECK(rep.measurements.at("eps") < 1e-4);
}

TEST_CASE("peak set geometry helpers") {
  PeakSetSpec E = PeakSetSpec::points({0.0, kPi});
  CHECK(E.total_measure() == 0.0);
  CHECK(E.distance(0.0) == 0.0);
  CHECK(E.distance(kPi / 2) == doctest::Approx(kPi / 2));
  CHECK(PeakSetSpec::empty_set().distance(1.0) == kTwoPi);
}
