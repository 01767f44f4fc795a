#include "diskmod/gleason.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace diskmod {

static double blaschke_gap(cplx c, cplx w1, cplx w2) {
  cplx b1 = (w1 - c) / (1.0 - std::conj(c) * w1);
  cplx b2 = (w2 - c) / (1.0 - std::conj(c) * w2);
  return std::abs(b1 - b2);
}

PartDistance functional_distance(const DiskPoint& w1, const DiskPoint& w2,
                                 const RunConfig& cfg) {
  PartDistance out{w1, w2, 0.0, 0.0, true, 0.0};
  const cplx z1 = w1.z, z2 = w2.z;
  if (std::abs(z1 - z2) == 0.0) return out;

  if (std::abs(z1) < 1.0 && std::abs(z2) < 1.0)
    out.pseudo_rho = std::abs(z1 - z2) / std::abs(1.0 - std::conj(z1) * z2);
  else
    out.pseudo_rho = 1.0;

  const double r_cap = 1.0 - std::ldexp(1.0, -13);
  std::vector<double> radii = {0.0};
  for (double r = 0.05; r < 0.96; r += 0.05) radii.push_back(r);
  for (int k = 1; k <= 12; ++k) radii.push_back(1.0 - std::ldexp(1.0, -k));

  cplx best_c = 0.0;
  double best = blaschke_gap(0.0, z1, z2);
  for (double r : radii)
    for (int j = 0; j < 64; ++j) {
      double t = kTwoPi * j / 64.0;
      cplx c = r * cplx(std::cos(t), std::sin(t));
      double v = blaschke_gap(c, z1, z2);
      if (v > best) {
        best = v;
        best_c = c;
      }
    }
  // Pattern-search refinement around the lattice winner.
  double step = 0.05;
  while (step > 1e-9) {
    bool moved = false;
    for (cplx d : {cplx(step, 0.0), cplx(-step, 0.0), cplx(0.0, step),
                   cplx(0.0, -step)}) {
      cplx c = best_c + d;
      if (std::abs(c) > r_cap) c *= r_cap / std::abs(c);
      double v = blaschke_gap(c, z1, z2);
      if (v > best) {
        best = v;
        best_c = c;
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }
  out.functional_norm = best;

  // Random-polynomial challenge of the Blaschke family's extremality.
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double best_poly = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<cplx> coeffs(9);
    for (cplx& v : coeffs) v = cplx(gauss(rng), gauss(rng));
    AnalyticElement p(std::move(coeffs));
    double norm = sup_norm(p, 256, cfg.oversample);
    if (norm == 0.0) continue;
    double v = std::abs(p.evaluate(w1) - p.evaluate(w2)) / norm;
    best_poly = std::max(best_poly, v);
  }
  out.challenge_excess = std::max(0.0, best_poly - best);
  out.functional_norm = std::max(best, best_poly);
  out.same_part = out.functional_norm < 2.0 - cfg.tol.tau_part;
  return out;
}

SmileMap build_smile_map(int n, const RunConfig& cfg) {
  if (n < 2)
    throw InvalidInput("build_smile_map: n must be >= 2 (the n = 1 annulus is "
                       "degenerate)");
  const double band = 1.0 / n;
  const double eta = 0.98 * std::log1p(band);
  int N = 4 * cfg.max_degree;
  if (N < 16384) N = 16384;
  CircleGrid g(N);

  auto profile = [&](double delta) {
    return SampledFunction::from_fn(g, [&](double t) {
      return cplx(eta * (2.0 / kPi) * std::atan(std::sin(t) / delta));
    });
  };
  auto swing = [&](double delta) {
    SampledFunction u = profile(delta);
    SampledFunction ut = conjugate(u);
    return std::abs(ut.values[0].real() -
                    ut.values[static_cast<std::size_t>(N / 2)].real());
  };

  const double delta_min = 6.0 * kTwoPi / N;
  if (swing(delta_min) < kPi)
    throw ConstructionFailure(
        "build_smile_map: annulus too thin to resolve the required phase swing "
        "at max_degree (n = " + std::to_string(n) + ")");
  double lo = delta_min, hi = 1.0;
  for (int it = 0; it < 60; ++it) {
    double mid = std::sqrt(lo * hi);
    if (swing(mid) >= kPi) lo = mid; else hi = mid;
  }
  const double delta = lo;

  SampledFunction u = profile(delta);
  SampledFunction ut = conjugate(u);
  // v = -(conjugate(u) - conjugate(u)(0)) completes -u analytically; the
  // accumulated phase at theta = pi is +-pi and either sign lands on -1.
  std::vector<cplx> rb(static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j) {
    const std::size_t i = static_cast<std::size_t>(j);
    double v = ut.values[0].real() - ut.values[i].real();
    rb[i] = std::exp(cplx(-u.values[i].real(), v));
  }

  double leak = 0.0;
  AnalyticElement r;
  {
    SampledFunction rbs(g, std::move(rb));
    const int cap = std::min(cfg.max_degree, N / 2 - 1);
    bool ok = false;
    for (int d = 64; d <= cap; d *= 2) {
      r = project_to_analytic(rbs, d, &leak);
      if (leak < cfg.tol.analyticity_tol) {
        ok = true;
        break;
      }
    }
    if (!ok) r = project_to_analytic(rbs, cap, &leak);
  }

  // Pin the endpoints exactly with a degree-1 correction.
  cplx e1 = r.evaluate(DiskPoint(1.0, 0.0)) - 1.0;
  cplx e2 = r.evaluate(DiskPoint(-1.0, 0.0)) + 1.0;
  AnalyticElement corr({0.5 * (e1 + e2), 0.5 * (e1 - e2)});
  r = r - corr;

  SmileMap sm{n, r};
  const double tol = cfg.tol.tau_smile;
  if (std::abs(r.evaluate(DiskPoint(1.0, 0.0)) - 1.0) > tol ||
      std::abs(r.evaluate(DiskPoint(-1.0, 0.0)) + 1.0) > tol)
    throw ConstructionFailure("build_smile_map: endpoint conditions failed");
  SampledFunction bnd = boundary_on(r, g);
  double lo_m = bnd.min_abs(), hi_m = bnd.max_abs();
  for (const DiskPoint& z : interior_test_lattice()) {
    double m = std::abs(r.evaluate(z));
    lo_m = std::min(lo_m, m);
    hi_m = std::max(hi_m, m);
  }
  if (lo_m < 1.0 - band || hi_m > 1.0 + band)
    throw ConstructionFailure(
        "build_smile_map: modulus left the annulus [1 - 1/n, 1 + 1/n]");
  return sm;
}

Certificate two_point_qbar_certificate(const DiskPoint& w1, const DiskPoint& w2,
                                       const AnalyticElement& G,
                                       const std::vector<int>& n_schedule,
                                       const RunConfig& cfg) {
  if (std::abs(w1.z - w2.z) == 0.0)
    throw InvalidInput("two_point_qbar_certificate: w1 and w2 must differ");
  if (n_schedule.empty())
    throw InvalidInput("two_point_qbar_certificate: empty schedule");

  cplx gw1 = G.evaluate(w1);
  if (std::abs(gw1) == 0.0)
    throw InvalidInput("two_point_qbar_certificate: G vanishes at w1");
  AnalyticElement G1 = G.scaled(1.0 / gw1);
  const double sup_G = sup_norm(G1, cfg.grid_n, cfg.oversample);
  if (std::abs(G1.evaluate(w2) + 1.0) > cfg.tol.tau_eq * (1.0 + sup_G))
    throw InvalidInput(
        "two_point_qbar_certificate: G does not satisfy G(w1) = -G(w2) after "
        "normalization");
  {
    InvertibilityResult inv = is_invertible(G1, cfg);
    if (!inv.invertible)
      throw NotInvertible("two_point_qbar_certificate: G is not invertible");
  }
  PartDistance d = functional_distance(w1, w2, cfg);
  if (d.same_part)
    throw SamePart(
        "two_point_qbar_certificate: w1 and w2 lie in the same Gleason part");

  // The construction places the phase spike at the boundary point; swap so
  // that w2 is the boundary one.
  DiskPoint p1 = w1, p2 = w2;
  if (std::abs(p2.z) < 1.0 - 1e-12) std::swap(p1, p2);
  if (std::abs(p2.z) < 1.0 - 1e-12)
    throw ConstructionFailure(
        "two_point_qbar_certificate: need at least one boundary point");
  const cplx rot = p2.z / std::abs(p2.z);

  CircleGrid base(cfg.grid_n);
  SampledFunction f = boundary_on(G1, base).abs().real_part();
  Certificate cert{ClassTag::QBAR_PLUS, f, {}, PeakSetSpec::empty_set(), {}};
  SubalgebraDescriptor A0 = SubalgebraDescriptor::two_point(w1, w2);

  for (std::size_t si = 0; si < n_schedule.size(); ++si) {
    int n = n_schedule[si];
    if (n < 2) throw InvalidInput("two_point_qbar_certificate: schedule n < 2");
    int N = 256;
    while (N < 256 * n * n) N *= 2;
    CircleGrid g(N);
    const double delta = 100.0 * kTwoPi / N;

    // Boundary profile with its sign switch at p2 and at the antipode.
    const double theta2 = std::arg(rot);
    SampledFunction p = SampledFunction::from_fn(g, [&](double t) {
      return cplx((2.0 / kPi) * std::atan(std::sin(t - theta2) / delta));
    });
    SampledFunction pt = conjugate(p);
    std::vector<cplx> Fb(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) {
      const std::size_t i = static_cast<std::size_t>(j);
      Fb[i] = cplx(p.values[i].real(), pt.values[i].real());
    }
    SampledFunction F(g, std::move(Fb));

    // F at the two points: Herglotz for interior, grid value for boundary.
    auto F_at = [&](const DiskPoint& w) -> cplx {
      if (std::abs(w.z) < 1.0 - 1e-12) return herglotz(p, w);
      double t = std::arg(w.z);
      int j = static_cast<int>(std::llround(t / kTwoPi * N));
      j = ((j % N) + N) % N;
      return F.values[static_cast<std::size_t>(j)];
    };
    cplx dF = F_at(p1) - F_at(p2);
    if (std::abs(dF) == 0.0)
      throw ConstructionFailure("two_point_qbar_certificate: degenerate profile");
    cplx t = cplx(0.0, kPi) / dF;

    std::vector<cplx> bb(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) {
      const std::size_t i = static_cast<std::size_t>(j);
      bb[i] = std::exp(t * F.values[i]);
    }
    SampledFunction beta_b(g, std::move(bb));
    double leak = 0.0;
    AnalyticElement beta;
    {
      const int cap = std::min(cfg.max_degree, N / 2 - 1);
      bool ok = false;
      for (int dg = 64; dg <= cap; dg *= 2) {
        beta = project_to_analytic(beta_b, dg, &leak);
        if (leak < cfg.tol.analyticity_tol) {
          ok = true;
          break;
        }
      }
      if (!ok) beta = project_to_analytic(beta_b, cap, &leak);
    }

    // Degree-1 corrector restoring exact two-point membership of b*G.
    cplx m = beta.evaluate(w1) * G1.evaluate(w1) - beta.evaluate(w2) * G1.evaluate(w2);
    cplx kappa = -m / G1.evaluate(w2);
    AnalyticElement atilde(
        {kappa * (-w1.z) / (w2.z - w1.z), kappa / (w2.z - w1.z)});
    AnalyticElement b = beta - atilde;
    AnalyticElement bG = b * G1;

    if (!belongs_to_subalgebra(bG, A0, cfg.tol.tau_eq))
      throw ConstructionFailure(
          "two_point_qbar_certificate: corrector failed to land in A0");
    {
      InvertibilityResult inv = is_invertible(b, cfg);
      if (!inv.invertible)
        throw ConstructionFailure("two_point_qbar_certificate: b not invertible");
    }

    int fineN = cfg.grid_n;
    while (bG.degree() >= fineN / 2) fineN *= 2;
    CircleGrid fine(fineN);
    SampledFunction bGb = boundary_on(bG, fine);
    SampledFunction fb = resample(f, fineN / cfg.grid_n);
    double residual = 0.0;
    const double sup_f = f.max_real();
    for (int j = 0; j < fineN; ++j) {
      const std::size_t i = static_cast<std::size_t>(j);
      residual = std::max(residual, std::abs(std::abs(bGb.values[i]) -
                                             fb.values[i].real()));
    }
    residual /= sup_f;

    cert.stages.push_back(CertificateStage{
        residual, ATuple({AnalyticElement({cplx(1.0)})}), ATuple({bG})});
    cert.achieved["stage" + std::to_string(si) + ".residual"] = residual;
    cert.achieved["stage" + std::to_string(si) + ".n"] = static_cast<double>(n);
  }
  return cert;
}

double obstruction_lower_bound(double c) {
  if (c < 1.0)
    throw InvalidInput("obstruction_lower_bound: c < 1 violates Cauchy-Schwarz");
  double disc = std::max(0.0, 2.0 * c * c - 2.0);
  return std::max(0.0, (2.0 / c - std::sqrt(disc)) / c);
}

ObstructionReport morita_obstruction(const ATuple& H, const ATuple& K, double c,
                                     const DiskPoint& w1, const DiskPoint& w2,
                                     const AnalyticElement& G,
                                     const RunConfig& cfg) {
  if (H.length() != K.length())
    throw InvalidCertificate("morita_obstruction: H and K lengths differ");
  if (c < 1.0 - 1e-12)
    throw InvalidCertificate("morita_obstruction: claimed c below 1");

  cplx gw1 = G.evaluate(w1);
  if (std::abs(gw1) == 0.0)
    throw InvalidCertificate("morita_obstruction: G vanishes at w1");
  AnalyticElement G1 = G.scaled(1.0 / gw1);
  const double sup_G = sup_norm(G1, cfg.grid_n, cfg.oversample);
  if (std::abs(G1.evaluate(w2) + 1.0) > 1e-6 * (1.0 + sup_G))
    throw InvalidCertificate(
        "morita_obstruction: G fails G(w1) = -G(w2) after normalization");

  SubalgebraDescriptor A0 = SubalgebraDescriptor::two_point(w1, w2);
  for (const AnalyticElement& a : H.entries)
    if (!belongs_to_subalgebra(a, A0, 1e-6))
      throw InvalidCertificate("morita_obstruction: H entry not in A0");
  for (const AnalyticElement& a : K.entries)
    if (!belongs_to_subalgebra(a, A0, 1e-6))
      throw InvalidCertificate("morita_obstruction: K entry not in A0");

  CircleGrid g(cfg.grid_n);
  SampledFunction f = boundary_on(G1, g).abs().real_part();
  SampledFunction dot = tuple_dot(
      ATuple(H.entries), ATuple(K.entries), g);  // degrees are modest here
  double pair_err = 0.0;
  for (const cplx& v : dot.values) pair_err = std::max(pair_err, std::abs(v - 1.0));
  if (pair_err > 1e-6 * (1.0 + f.max_real()))
    throw InvalidCertificate("morita_obstruction: pairing H.K = 1 fails");

  double measured_c = 0.0;
  {
    SampledFunction Kn = tuple_pointwise_norm(K, g);
    SampledFunction Hn = tuple_pointwise_norm(H, g);
    for (int j = 0; j < g.n; ++j) {
      const std::size_t i = static_cast<std::size_t>(j);
      const double fv = f.values[i].real();
      if (fv > 0.0) measured_c = std::max(measured_c, Kn.values[i].real() / fv);
      measured_c = std::max(measured_c, fv * Hn.values[i].real());
    }
  }

  cplx Gw2 = G1.evaluate(w2);
  double defect_sq = 0.0;
  for (int i = 0; i < K.length(); ++i) {
    cplx theta = K.entries[static_cast<std::size_t>(i)].evaluate(w2) / Gw2;
    cplx pi = H.entries[static_cast<std::size_t>(i)].evaluate(w2) * Gw2;
    // Rotate the pair so the H side is nonnegative at w2; products are
    // unchanged.
    if (std::abs(pi) > 0.0) {
      cplx mu = std::conj(pi) / std::abs(pi);
      pi *= mu;
      theta /= mu;
    }
    defect_sq += std::norm(theta - std::conj(pi));
  }

  PartDistance d = functional_distance(w1, w2, cfg);
  ObstructionReport rep;
  rep.c = c;
  rep.measured_c = measured_c;
  rep.defect = std::sqrt(defect_sq);
  rep.lower_bound_L = obstruction_lower_bound(std::max(c, 1.0));
  rep.functional_dist = d.functional_norm;
  rep.verdict = (rep.lower_bound_L > d.functional_norm + cfg.tol.tau_part)
                    ? "VIOLATION"
                    : "CONSISTENT";
  return rep;
}

}  // namespace diskmod
