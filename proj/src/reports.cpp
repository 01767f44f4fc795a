#include "diskmod/reports.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace diskmod {

json Report::body() const {
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"config", to_json(config)},
          {"inputs", inputs},
          {"results", results},
          {"provenance", {{"artifact_version", kArtifactVersion}}}};
}

std::string Report::dump() const { return body().dump(2) + "\n"; }

static int exit_code_for(const DomainError& e) {
  if (dynamic_cast<const Inconclusive*>(&e)) return kExitInconclusive;
  return kExitInputError;
}

Report cmd_outer(const SampledFunction& f, const RunConfig& cfg) {
  Report rep{"outer", cfg};
  rep.inputs["f"] = to_json(f);
  try {
    if (!f.is_real(1e-12 * (1.0 + f.max_abs())) || f.min_real() < 0.0)
      throw InvalidInput("outer: f must be real and nonnegative");
    LogIntegrabilityDiagnosis diag =
        log_integrability(f, {5.0, 10.0, 15.0, 20.0}, cfg.tol.tol_logint);

    const int n = f.grid.n;
    const double M = cfg.tol.m_clamp;
    std::vector<cplx> lv(static_cast<std::size_t>(n));
    std::vector<bool> clamped(static_cast<std::size_t>(n), false);
    for (int j = 0; j < n; ++j) {
      const std::size_t i = static_cast<std::size_t>(j);
      double v = f.values[i].real();
      double l = v > 0.0 ? std::log(v) : -2.0 * M;
      if (l <= -M) {
        l = -M;
        clamped[i] = true;
      }
      lv[i] = l;
    }
    SampledFunction phi = outer_boundary(SampledFunction(f.grid, std::move(lv)));

    double residual = 0.0, residual_off = 0.0;
    for (int j = 0; j < n; ++j) {
      const std::size_t i = static_cast<std::size_t>(j);
      double r = std::abs(std::abs(phi.values[i]) - f.values[i].real());
      residual = std::max(residual, r);
      bool near_clamp = false;
      for (int d = -4; d <= 4 && !near_clamp; ++d)
        near_clamp = clamped[static_cast<std::size_t>(((j + d) % n + n) % n)];
      if (!near_clamp) residual_off = std::max(residual_off, r);
    }
    rep.results = {{"diagnosis", to_json(diag)},
                   {"phi", to_json(phi)},
                   {"residual", residual},
                   {"residual_off_clamp", residual_off}};
    if (diag.verdict == LogIntegrabilityVerdict::DIVERGENT_SUSPECTED)
      rep.exit_code = kExitInconclusive;
  } catch (const DomainError& e) {
    rep.results = {{"error", e.what()}};
    rep.exit_code = exit_code_for(e);
  }
  return rep;
}

static Certificate generate_M_from_Q(const SampledFunction& f,
                                     const std::vector<double>& eps_schedule,
                                     const RunConfig& cfg) {
  Certificate q = generate_Q(f, cfg);
  const ATuple& K = q.stages.front().K;
  const ATuple& H = q.stages.front().H;

  int m = f.grid.n;
  for (const AnalyticElement& a : K.entries)
    while (a.degree() >= m / 2) m *= 2;
  for (const AnalyticElement& a : H.entries)
    while (a.degree() >= m / 2) m *= 2;
  CircleGrid g(m);
  SampledFunction fb = resample(f, m / f.grid.n);
  SampledFunction Kn = tuple_pointwise_norm(K, g);
  SampledFunction Hn = tuple_pointwise_norm(H, g);
  SampledFunction dot = tuple_dot(H, K, g);
  double measured = 0.0;
  for (int j = 0; j < m; ++j) {
    const std::size_t i = static_cast<std::size_t>(j);
    const double fv = fb.values[i].real();
    measured = std::max(measured, std::abs(dot.values[i] - 1.0));
    measured = std::max(measured, std::abs(Kn.values[i].real() / fv - 1.0));
    measured = std::max(measured, std::abs(fv * Hn.values[i].real() - 1.0));
  }

  Certificate cert{ClassTag::M_TIGHT, f, {}, PeakSetSpec::empty_set(), {}};
  std::vector<double> schedule = eps_schedule;
  if (schedule.empty()) schedule.push_back(measured);
  for (double eps : schedule) {
    double declared = std::max(eps, measured * (1.0 + 1e-12) + 1e-15);
    cert.stages.push_back({declared, H, K});
  }
  cert.achieved["measured_eps"] = measured;
  return cert;
}

Report cmd_certify(ClassTag tag, const SampledFunction& f,
                   const std::vector<double>& eps_schedule,
                   const PeakSetSpec& peak_set, const RunConfig& cfg) {
  Report rep{"certify", cfg};
  rep.inputs = {{"tag", to_string(tag)},
                {"f", to_json(f)},
                {"eps_schedule", eps_schedule},
                {"peak_set", to_json(peak_set)}};
  try {
    Certificate cert{tag, f, {}, peak_set, {}};
    VerificationReport check;
    switch (tag) {
      case ClassTag::Q: {
        cert = generate_Q(f, cfg);
        check = verify_Q(f, cert.stages.front().K.entries.front(), cfg);
        break;
      }
      case ClassTag::M_TIGHT: {
        cert = generate_M_from_Q(f, eps_schedule, cfg);
        check = verify_M(cert, cfg);
        VerificationReport alt = verify_M_alternative(cert, cfg);
        for (const auto& [k, v] : alt.measurements)
          check.measurements["alt." + k] = v;
        for (const std::string& r : alt.reasons) check.fail("alt: " + r);
        break;
      }
      case ClassTag::R_E: {
        if (eps_schedule.empty())
          throw InvalidInput("certify R_E: eps schedule required");
        cert = generate_R_certificate(f, peak_set, eps_schedule, cfg);
        check = verify_R(cert, cfg);
        break;
      }
      default:
        throw InvalidInput("certify: no generator for tag " + to_string(tag));
    }
    rep.results = {{"certificate", to_json(cert)},
                   {"verification", to_json(check)}};
    rep.exit_code = check.pass ? kExitPass : kExitFail;
  } catch (const DomainError& e) {
    rep.results = {{"error", e.what()}};
    rep.exit_code = exit_code_for(e);
  }
  return rep;
}

Report cmd_isometry(const SampledFunction& f1, const SampledFunction& f2,
                    const RunConfig& cfg) {
  Report rep{"isometry", cfg};
  rep.inputs = {{"f1", to_json(f1)}, {"f2", to_json(f2)}};
  try {
    FunctionModule M1{f1, SubalgebraDescriptor::full()};
    FunctionModule M2{f2, SubalgebraDescriptor::full()};
    IsometryDecision d = decide_isometric(M1, M2, cfg);
    rep.results = {{"decision", to_json(d)}};
    rep.exit_code = d.verdict == IsometryVerdict::ISOMETRIC ? kExitPass
                                                            : kExitInconclusive;
  } catch (const DomainError& e) {
    rep.results = {{"error", e.what()}};
    rep.exit_code = exit_code_for(e);
  }
  return rep;
}

Report cmd_gleason(const DiskPoint& w1, const DiskPoint& w2,
                   const AnalyticElement* G, const std::vector<int>& n_schedule,
                   const RunConfig& cfg) {
  Report rep{"gleason", cfg};
  rep.inputs = {{"w1", json::array({w1.z.real(), w1.z.imag()})},
                {"w2", json::array({w2.z.real(), w2.z.imag()})}};
  if (G) rep.inputs["G"] = to_json(*G);
  try {
    PartDistance d = functional_distance(w1, w2, cfg);
    rep.results = {{"distance", to_json(d)}};
    if (G) {
      if (d.same_part) {
        rep.results["dichotomy"] = "SAME_PART";
      } else {
        Certificate cert = two_point_qbar_certificate(w1, w2, *G, n_schedule, cfg);
        bool decreasing = true;
        for (std::size_t i = 1; i < cert.stages.size(); ++i)
          decreasing = decreasing && cert.stages[i].eps < cert.stages[i - 1].eps;
        rep.results["dichotomy"] = "DIFFERENT_PARTS";
        rep.results["certificate"] = to_json(cert);
        rep.results["residuals_decreasing"] = decreasing;
        if (!decreasing) rep.exit_code = kExitFail;
      }
    }
  } catch (const SamePart&) {
    rep.results["dichotomy"] = "SAME_PART";
  } catch (const DomainError& e) {
    rep.results = {{"error", e.what()}};
    rep.exit_code = exit_code_for(e);
  }
  return rep;
}

Report cmd_morita_two_point(const ATuple& H, const ATuple& K, double c,
                            const DiskPoint& w1, const DiskPoint& w2,
                            const AnalyticElement& G, const RunConfig& cfg) {
  Report rep{"morita-two-point", cfg};
  rep.inputs = {{"H", to_json(H)},
                {"K", to_json(K)},
                {"c", c},
                {"w1", json::array({w1.z.real(), w1.z.imag()})},
                {"w2", json::array({w2.z.real(), w2.z.imag()})},
                {"G", to_json(G)}};
  try {
    ObstructionReport ob = morita_obstruction(H, K, c, w1, w2, G, cfg);
    rep.results = {{"obstruction", to_json(ob)}};
    rep.exit_code = ob.verdict == "VIOLATION" ? kExitFail : kExitPass;
  } catch (const DomainError& e) {
    rep.results = {{"error", e.what()}};
    rep.exit_code = exit_code_for(e);
  }
  return rep;
}

Report cmd_picard(const SampledFunction& f, const MobiusMap& mobius,
                  const RunConfig& cfg) {
  Report rep{"picard", cfg};
  rep.inputs = {{"f", to_json(f)}, {"mobius", to_json(mobius)}};
  try {
    FunctionModule M{f, SubalgebraDescriptor::full()};
    PicardDecomposition d = picard_decompose(M, mobius, cfg);
    rep.results = {{"decomposition", to_json(d)}};
  } catch (const DomainError& e) {
    rep.results = {{"error", e.what()}};
    rep.exit_code = exit_code_for(e);
  }
  return rep;
}

static std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

std::vector<std::string> emit_plot_data(const Report& report,
                                        const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  std::vector<std::string> written;

  bool has_cert = report.results.contains("certificate");
  Certificate cert{ClassTag::Q, SampledFunction::constant(CircleGrid(16), 1.0),
                   {}, PeakSetSpec::empty_set(), {}};
  if (has_cert) cert = certificate_from_json(report.results.at("certificate"));

  if (has_cert) {
    const SampledFunction& f = cert.target;
    const CircleGrid& g = f.grid;
    for (std::size_t s = 0; s < cert.stages.size(); ++s) {
      const CertificateStage& st = cert.stages[s];
      SampledFunction Kn = tuple_pointwise_norm(st.K, g);
      SampledFunction Hn = tuple_pointwise_norm(st.H, g);
      SampledFunction e = tuple_dot(st.H, st.K, g);
      fs::path p = fs::path(out_dir) /
                   (report.command + "_stage" + std::to_string(s) + ".csv");
      std::ofstream out(p);
      out << "theta,f,K_norm,H_inv_norm,e_m\n";
      for (int j = 0; j < g.n; ++j) {
        const std::size_t i = static_cast<std::size_t>(j);
        const double hn = Hn.values[i].real();
        out << fmt(g.theta(j)) << ',' << fmt(f.values[i].real()) << ','
            << fmt(Kn.values[i].real()) << ','
            << fmt(hn > 0.0 ? 1.0 / hn : 0.0) << ','
            << fmt(std::abs(e.values[i])) << '\n';
      }
      written.push_back(p.string());
    }
  }

  fs::path sp = fs::path(out_dir) / (report.command + "_summary.csv");
  {
    std::ofstream out(sp);
    out << "stage,eps\n";
    if (has_cert)
      for (std::size_t s = 0; s < cert.stages.size(); ++s)
        out << s << ',' << fmt(cert.stages[s].eps) << '\n';
    written.push_back(sp.string());
  }
  return written;
}

bool CorpusResult::all_passed() const {
  for (bool b : passed)
    if (!b) return false;
  return true;
}

CorpusResult run_corpus(const std::string& out_dir, const RunConfig& cfg) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  CorpusResult res;
  CircleGrid g(cfg.grid_n);

  auto record = [&](const std::string& name, const Report& rep, bool ok) {
    fs::path p = fs::path(out_dir) / (name + ".json");
    std::ofstream(p) << rep.dump();
    res.names.push_back(name);
    res.passed.push_back(ok);
    res.files.push_back(p.string());
  };

  {
    SampledFunction f =
        SampledFunction::from_fn(g, [](double t) { return std::exp(std::cos(t)); });
    Report rep = cmd_outer(f, cfg);
    record("outer_exp_cos", rep,
           rep.exit_code == kExitPass &&
               rep.results.at("residual").get<double>() < 1e-8);
  }
  {
    SampledFunction f = SampledFunction::from_fn(
        g, [](double t) { return std::abs(1.0 + std::polar(1.0, t)); });
    Report rep = cmd_outer(f, cfg);
    record("outer_abs_one_plus_z", rep,
           rep.exit_code == kExitPass &&
               rep.results.at("residual_off_clamp").get<double>() < 1e-4);
  }
  {
    SampledFunction f =
        SampledFunction::from_fn(g, [](double t) { return 2.0 + std::cos(t); });
    Report rep = cmd_certify(ClassTag::Q, f, {}, PeakSetSpec::empty_set(), cfg);
    record("certify_Q_two_plus_cos", rep, rep.exit_code == kExitPass);
  }
  {
    SampledFunction f = SampledFunction::from_fn(
        g, [](double t) { return std::abs(1.0 + std::polar(1.0, t)); });
    Report rep = cmd_certify(ClassTag::R_E, f, {0.1, 0.01},
                             PeakSetSpec::points({kPi}), cfg);
    record("certify_RE_one_plus_z", rep, rep.exit_code == kExitPass);
  }
  {
    SampledFunction f1 = SampledFunction::from_fn(
        g, [](double t) { return std::abs(2.0 + std::polar(1.0, t)); });
    SampledFunction f2 = SampledFunction::constant(g, 1.0);
    Report rep = cmd_isometry(f1, f2, cfg);
    record("isometry_two_plus_z_vs_one", rep, rep.exit_code == kExitPass);
  }
  {
    Report rep = cmd_gleason(DiskPoint(0.5, 0.0), DiskPoint(-0.5, 0.0), nullptr,
                             {4, 8, 16}, cfg);
    bool same = rep.results.contains("distance") &&
                rep.results.at("distance").at("same_part").get<bool>();
    record("gleason_half_minus_half", rep, rep.exit_code == kExitPass && same);
  }
  return res;
}

}  // namespace diskmod
