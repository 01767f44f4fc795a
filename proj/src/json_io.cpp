#include "diskmod/json_io.hpp"

namespace diskmod {

static json pair_of(cplx v) { return json::array({v.real(), v.imag()}); }

static cplx pair_from(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw InvalidInput("json: complex values must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

static json pairs_of(const std::vector<cplx>& v) {
  json out = json::array();
  for (const cplx& x : v) out.push_back(pair_of(x));
  return out;
}

static std::vector<cplx> pairs_from(const json& j) {
  std::vector<cplx> out;
  out.reserve(j.size());
  for (const json& x : j) out.push_back(pair_from(x));
  return out;
}

json to_json(const SampledFunction& f) {
  return {{"kind", "samples"}, {"n", f.grid.n}, {"values", pairs_of(f.values)}};
}

SampledFunction sampled_from_json(const json& j) {
  const std::string kind = j.value("kind", "samples");
  if (kind == "samples") {
    CircleGrid g(j.at("n").get<int>());
    std::vector<cplx> v = pairs_from(j.at("values"));
    if (static_cast<int>(v.size()) != g.n)
      throw InvalidInput("json: sample count does not match n");
    return {g, std::move(v)};
  }
  if (kind == "fourier") {
    const int n = j.at("n").get<int>();
    std::vector<cplx> raw = pairs_from(j.at("coeffs"));
    if (static_cast<int>(raw.size()) > n)
      throw InvalidInput("json: more Fourier coefficients than grid points");
    FourierCoefficients fc{n, std::vector<cplx>(static_cast<std::size_t>(n))};
    // Coefficient list is centered at frequency zero.
    const int lo = -static_cast<int>(raw.size()) / 2;
    for (std::size_t i = 0; i < raw.size(); ++i)
      fc.at(lo + static_cast<int>(i)) = raw[i];
    return fft_synthesis(fc);
  }
  throw InvalidInput("json: unknown SampledFunction kind '" + kind + "'");
}

json to_json(const AnalyticElement& a) {
  return {{"kind", "analytic"}, {"coeffs", pairs_of(a.coeffs)}};
}

AnalyticElement analytic_from_json(const json& j) {
  if (j.value("kind", "analytic") != "analytic")
    throw InvalidInput("json: expected kind 'analytic'");
  return AnalyticElement(pairs_from(j.at("coeffs")));
}

json to_json(const ATuple& t) {
  json entries = json::array();
  for (const AnalyticElement& a : t.entries) entries.push_back(to_json(a));
  return {{"kind", "atuple"}, {"entries", entries}};
}

ATuple atuple_from_json(const json& j) {
  if (j.value("kind", "atuple") != "atuple")
    throw InvalidInput("json: expected kind 'atuple'");
  std::vector<AnalyticElement> entries;
  for (const json& e : j.at("entries")) entries.push_back(analytic_from_json(e));
  return ATuple(std::move(entries));
}

json to_json(const PeakSetSpec& e) {
  json out = json::array();
  for (const ArcInterval& arc : e.intervals)
    out.push_back(json::array({arc.a, arc.b}));
  return out;
}

PeakSetSpec peak_set_from_json(const json& j) {
  PeakSetSpec out;
  for (const json& arc : j) {
    if (!arc.is_array() || arc.size() != 2)
      throw InvalidInput("json: peak set arcs must be [a, b] pairs");
    out.intervals.push_back({arc[0].get<double>(), arc[1].get<double>()});
  }
  return out;
}

json to_json(const Certificate& c) {
  json stages = json::array();
  for (const CertificateStage& s : c.stages) {
    json ktuple = json::array(), htuple = json::array();
    for (const AnalyticElement& a : s.K.entries) ktuple.push_back(to_json(a));
    for (const AnalyticElement& a : s.H.entries) htuple.push_back(to_json(a));
    stages.push_back({{"eps", s.eps}, {"K", ktuple}, {"H", htuple}});
  }
  json achieved = json::object();
  for (const auto& [k, v] : c.achieved) achieved[k] = v;
  return {{"tag", to_string(c.tag)},
          {"f", to_json(c.target)},
          {"peak_set", to_json(c.peak_set)},
          {"stages", stages},
          {"achieved", achieved}};
}

ClassTag tag_from_string(const std::string& s) {
  if (s == "P") return ClassTag::P;
  if (s == "Q") return ClassTag::Q;
  if (s == "QBAR_PLUS") return ClassTag::QBAR_PLUS;
  if (s == "G_CONVEX") return ClassTag::G_CONVEX;
  if (s == "M_TIGHT") return ClassTag::M_TIGHT;
  if (s == "R_E") return ClassTag::R_E;
  throw InvalidInput("json: unknown certificate tag '" + s + "'");
}

Certificate certificate_from_json(const json& j) {
  Certificate c{tag_from_string(j.at("tag").get<std::string>()),
                sampled_from_json(j.at("f")),
                {},
                peak_set_from_json(j.value("peak_set", json::array())),
                {}};
  for (const json& s : j.at("stages")) {
    std::vector<AnalyticElement> K, H;
    for (const json& a : s.at("K")) K.push_back(analytic_from_json(a));
    for (const json& a : s.at("H")) H.push_back(analytic_from_json(a));
    c.stages.push_back(
        {s.at("eps").get<double>(), ATuple(std::move(H)), ATuple(std::move(K))});
  }
  if (j.contains("achieved"))
    for (const auto& [k, v] : j.at("achieved").items())
      c.achieved[k] = v.get<double>();
  return c;
}

json to_json(const LogIntegrabilityDiagnosis& d) {
  return {{"cutoffs", d.cutoffs},
          {"means", d.means},
          {"verdict", to_string(d.verdict)},
          {"heuristic", d.heuristic}};
}

json to_json(const VerificationReport& r) {
  json meas = json::object();
  for (const auto& [k, v] : r.measurements) meas[k] = v;
  return {{"pass", r.pass}, {"reasons", r.reasons}, {"measurements", meas}};
}

json to_json(const MobiusMap& m) {
  return {{"a", pair_of(m.a.z)}, {"lambda", pair_of(m.lambda)}};
}

MobiusMap mobius_from_json(const json& j) {
  MobiusMap m;
  m.a = DiskPoint(pair_from(j.at("a")));
  m.lambda = pair_from(j.at("lambda"));
  return m;
}

json to_json(const IsometryDecision& d) {
  json out = {{"verdict", d.verdict == IsometryVerdict::ISOMETRIC
                              ? "ISOMETRIC"
                              : "INCONCLUSIVE"},
              {"residual", d.residual}};
  if (d.witness) out["witness"] = to_json(*d.witness);
  if (d.verdict == IsometryVerdict::INCONCLUSIVE) {
    out["negative_hint"] = d.negative_hint;
    out["obstruction"] = d.obstruction;
  }
  return out;
}

json to_json(const PicardDecomposition& p) {
  return {{"mobius", to_json(p.element.mobius)},
          {"weight", to_json(p.element.weight_class)},
          {"conjugate_profile", to_json(p.diagnostics.conjugate_profile)},
          {"lags", p.diagnostics.lags},
          {"continuity", p.diagnostics.continuity},
          {"rough", p.diagnostics.rough},
          {"heuristic", p.diagnostics.heuristic}};
}

json to_json(const PartDistance& d) {
  return {{"w1", pair_of(d.w1.z)},
          {"w2", pair_of(d.w2.z)},
          {"pseudo_rho", d.pseudo_rho},
          {"functional_norm", d.functional_norm},
          {"same_part", d.same_part},
          {"challenge_excess", d.challenge_excess}};
}

json to_json(const ObstructionReport& r) {
  return {{"c", r.c},
          {"measured_c", r.measured_c},
          {"defect", r.defect},
          {"lower_bound_L", r.lower_bound_L},
          {"functional_distance", r.functional_dist},
          {"verdict", r.verdict}};
}

json to_json(const RunConfig& cfg) {
  return {{"grid_n", cfg.grid_n},
          {"oversample", cfg.oversample},
          {"max_degree", cfg.max_degree},
          {"seed", cfg.seed},
          {"tolerances",
           {{"tol_Q", cfg.tol.tol_Q},
            {"tau_eq", cfg.tol.tau_eq},
            {"tau_part", cfg.tol.tau_part},
            {"tau_inv", cfg.tol.tau_inv},
            {"tau_zero", cfg.tol.tau_zero},
            {"m_clamp", cfg.tol.m_clamp},
            {"tol_logint", cfg.tol.tol_logint}}}};
}

RunConfig run_config_from_json(const json& j) {
  RunConfig cfg;
  cfg.grid_n = j.value("grid_n", cfg.grid_n);
  cfg.oversample = j.value("oversample", cfg.oversample);
  cfg.max_degree = j.value("max_degree", cfg.max_degree);
  cfg.seed = j.value("seed", cfg.seed);
  if (j.contains("tolerances")) {
    const json& t = j.at("tolerances");
    cfg.tol.tol_Q = t.value("tol_Q", cfg.tol.tol_Q);
    cfg.tol.tau_eq = t.value("tau_eq", cfg.tol.tau_eq);
    cfg.tol.tau_part = t.value("tau_part", cfg.tol.tau_part);
    cfg.tol.tau_inv = t.value("tau_inv", cfg.tol.tau_inv);
    cfg.tol.tau_zero = t.value("tau_zero", cfg.tol.tau_zero);
    cfg.tol.m_clamp = t.value("m_clamp", cfg.tol.m_clamp);
    cfg.tol.tol_logint = t.value("tol_logint", cfg.tol.tol_logint);
  }
  return cfg;
}

}  // namespace diskmod
