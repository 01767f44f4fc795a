#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "diskmod/json_io.hpp"
#include "diskmod/reports.hpp"

using namespace diskmod;

TEST_CASE("sampled function round trips through JSON") {
  CircleGrid g(64);
  SampledFunction f = SampledFunction::from_fn(
      g, [](double t) { return std::polar(2.0, t) + cplx(0.5); });
  SampledFunction back = sampled_from_json(to_json(f));
  REQUIRE(back.grid.n == 64);
  for (int j = 0; j < 64; ++j) CHECK(back.values[j] == f.values[j]);
}

TEST_CASE("fourier kind synthesizes onto the grid") {
  json j = {{"kind", "fourier"},
            {"n", 64},
            {"coeffs", json::array({json::array({0.0, 0.0}),
                                    json::array({2.0, 0.0}),
                                    json::array({1.0, 0.0})})}};
  // Centered list of length 3 covers frequencies -1, 0, 1.
  SampledFunction f = sampled_from_json(j);
  for (int jj = 0; jj < 64; ++jj) {
    double t = f.grid.theta(jj);
    cplx expect = 2.0 + std::polar(1.0, t);
    CHECK(std::abs(f.values[jj] - expect) < 1e-12);
  }
}

TEST_CASE("analytic elements and tuples round trip") {
  AnalyticElement a({cplx(1.0, -2.0), cplx(0.0, 3.5)});
  AnalyticElement back = analytic_from_json(to_json(a));
  CHECK(back.coeffs == a.coeffs);

  ATuple t(std::vector<AnalyticElement>{a, AnalyticElement::monomial(2)});
  ATuple tb = atuple_from_json(to_json(t));
  REQUIRE(tb.length() == 2);
  CHECK(tb.entries[0].coeffs == a.coeffs);
}

TEST_CASE("certificates round trip with stages and achieved values") {
  CircleGrid g(32);
  SampledFunction f = SampledFunction::constant(g, 1.0);
  ATuple one(std::vector<AnalyticElement>{AnalyticElement({cplx(1.0)})});
  Certificate cert{ClassTag::R_E,
                   f,
                   {{0.1, one, one}, {0.01, one, one}},
                   PeakSetSpec::points({kPi}),
                   {{"stage0.env_slack", 1e-9}}};
  Certificate back = certificate_from_json(to_json(cert));
  CHECK(back.tag == ClassTag::R_E);
  REQUIRE(back.stages.size() == 2);
  CHECK(back.stages[0].eps == 0.1);
  CHECK(back.peak_set.intervals.size() == 1);
  CHECK(back.achieved.at("stage0.env_slack") == 1e-9);
}

TEST_CASE("malformed input is rejected with input errors") {
  CHECK_THROWS_AS(sampled_from_json(json{{"kind", "nope"}}), InvalidInput);
  CHECK_THROWS_AS(sampled_from_json(json{{"kind", "samples"},
                                         {"n", 64},
                                         {"values", json::array()}}),
                  InvalidInput);
  CHECK_THROWS_AS(tag_from_string("XYZ"), InvalidInput);
}

TEST_CASE("reports carry the schema version and are deterministic") {
  CircleGrid g(64);
  SampledFunction f = SampledFunction::constant(g, 1.0);
  Report r1 = cmd_outer(f);
  Report r2 = cmd_outer(f);
  CHECK(r1.body().at("schema_version") == kSchemaVersion);
  CHECK(r1.dump() == r2.dump());
  CHECK(r1.exit_code == kExitPass);
  CHECK(r1.results.at("residual").get<double>() < 1e-12);
}

TEST_CASE("run config round trips") {
  RunConfig cfg;
  cfg.grid_n = 2048;
  cfg.tol.tol_Q = 5e-7;
  RunConfig back = run_config_from_json(to_json(cfg));
  CHECK(back.grid_n == 2048);
  CHECK(back.tol.tol_Q == 5e-7);
  CHECK(back.seed == cfg.seed);
}
