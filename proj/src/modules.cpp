#include "diskmod/modules.hpp"

#include <algorithm>
#include <cmath>

namespace diskmod {

cplx MobiusMap::apply(cplx z) const {
  return lambda * (z - a.z) / (1.0 - std::conj(a.z) * z);
}

bool MobiusMap::is_identity() const {
  return std::abs(a.z) == 0.0 && std::abs(lambda - 1.0) == 0.0;
}

static void require_weight_positive(const FunctionModule& M,
                                    const std::string& who) {
  if (!M.weight.is_real(1e-12 * (1.0 + M.weight.max_abs())) ||
      M.weight.min_real() <= 0.0)
    throw NotStrictlyPositive(who + ": module weight must be strictly positive");
}

double module_norm(const AnalyticElement& a, const FunctionModule& M,
                   const RunConfig& cfg) {
  if (M.algebra.variant == SubalgebraDescriptor::Variant::TWO_POINT &&
      !belongs_to_subalgebra(a, M.algebra, cfg.tol.tau_eq))
    throw NotInSubalgebra("module_norm: element does not satisfy a(w1) = a(w2)");
  int m = M.weight.grid.n;
  while (a.degree() >= m / 2) m *= 2;
  m *= cfg.oversample;
  CircleGrid fine(m);
  SampledFunction fb = resample(M.weight, m / M.weight.grid.n);
  SampledFunction ab = boundary_on(a, fine);
  double sup = 0.0;
  for (int j = 0; j < m; ++j) {
    const std::size_t i = static_cast<std::size_t>(j);
    sup = std::max(sup, std::abs(ab.values[i]) * std::abs(fb.values[i].real()));
  }
  return sup;
}

IsometryDecision decide_isometric(const FunctionModule& M1, const FunctionModule& M2,
                                  const RunConfig& cfg) {
  require_weight_positive(M1, "decide_isometric");
  require_weight_positive(M2, "decide_isometric");
  if (M1.algebra.variant != SubalgebraDescriptor::Variant::FULL ||
      M2.algebra.variant != SubalgebraDescriptor::Variant::FULL)
    throw InvalidInput("decide_isometric: both algebras must be FULL");
  if (!(M1.weight.grid == M2.weight.grid))
    throw InvalidInput("decide_isometric: weights live on different grids");

  SampledFunction ratio = M1.weight.pointwise_div(M2.weight).real_part();
  try {
    Certificate cert = generate_Q(ratio, cfg);
    return {IsometryVerdict::ISOMETRIC, cert.stages.front().K.entries.front(),
            cert.achieved.at("residual")};
  } catch (const TruncationFailure&) {
    // Best effort at the degree cap, for the residual report and the
    // negative hint.
    const int n = ratio.grid.n;
    std::vector<cplx> lv(static_cast<std::size_t>(n));
    double log_mean = 0.0;
    for (int j = 0; j < n; ++j) {
      double l = std::log(ratio.values[static_cast<std::size_t>(j)].real());
      lv[static_cast<std::size_t>(j)] = l;
      log_mean += l / n;
    }
    SampledFunction logr(ratio.grid, std::move(lv));
    int work = n;
    while (work < 2 * cfg.max_degree) work *= 2;
    SampledFunction G = outer_boundary(resample(logr, work / n).real_part());
    AnalyticElement g =
        project_to_analytic(G, std::min(cfg.max_degree, work / 2 - 1));
    VerificationReport rep = verify_Q(ratio, g, cfg);
    IsometryDecision d{IsometryVerdict::INCONCLUSIVE, std::nullopt,
                       rep.measurements.at("residual")};
    const double witness_log = std::log(std::abs(g.evaluate(DiskPoint(0.0, 0.0))));
    d.obstruction = std::abs(log_mean - witness_log);
    d.negative_hint = d.obstruction > 0.1;
    return d;
  }
}

AnalyticElement compose_with_mobius(const AnalyticElement& a, const MobiusMap& phi,
                                    const RunConfig& cfg, bool* leakage_warning) {
  int m = cfg.grid_n;
  while (a.degree() >= m / 4) m *= 2;
  CircleGrid g(m);
  std::vector<cplx> v(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    cplx z = phi.apply(g.point(j));
    if (std::abs(z) > 1.0) z /= std::abs(z);
    v[static_cast<std::size_t>(j)] = a.evaluate(DiskPoint(z));
  }
  SampledFunction samples(g, std::move(v));
  double leak = 0.0;
  AnalyticElement out =
      project_to_analytic(samples, std::min(cfg.max_degree, m / 2 - 1), &leak);
  if (leakage_warning) *leakage_warning = leak > cfg.tol.analyticity_tol;
  return out;
}

CanonicalIsometry build_canonical_isometry(const FunctionModule& M1,
                                           const FunctionModule& M2,
                                           const ModuleMap& map,
                                           const RunConfig& cfg) {
  require_weight_positive(M2, "build_canonical_isometry");
  try {
    InvertibilityResult inv = is_invertible(map.multiplier, cfg);
    if (!inv.invertible)
      throw NotInvertible("build_canonical_isometry: multiplier is not invertible");
  } catch (const Inconclusive& e) {
    throw NotInvertible(std::string("build_canonical_isometry: ") + e.what());
  }
  MobiusMap phi = map.mobius;
  AnalyticElement h = map.multiplier;
  SampledFunction f2 = M2.weight;
  CanonicalIsometry T;
  T.apply = [phi, h, f2](const AnalyticElement& a) {
    int m = f2.grid.n;
    while (a.degree() >= m / 2 || h.degree() >= m / 2) m *= 2;
    CircleGrid g(m);
    SampledFunction hb = boundary_on(h, g);
    SampledFunction fb = resample(f2, m / f2.grid.n);
    std::vector<cplx> v(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
      cplx z = phi.apply(g.point(j));
      if (std::abs(z) > 1.0) z /= std::abs(z);
      const std::size_t i = static_cast<std::size_t>(j);
      v[i] = a.evaluate(DiskPoint(z)) * hb.values[i] * fb.values[i].real();
    }
    return SampledFunction(g, std::move(v));
  };
  return T;
}

FunctionModule tensor_weight(const FunctionModule& M1, const FunctionModule& M2) {
  if (M1.algebra.variant != SubalgebraDescriptor::Variant::FULL ||
      M2.algebra.variant != SubalgebraDescriptor::Variant::FULL)
    throw InvalidInput("tensor_weight: both algebras must be FULL");
  if (!(M1.weight.grid == M2.weight.grid))
    throw InvalidInput("tensor_weight: weights live on different grids");
  return {M1.weight.pointwise_mul(M2.weight).real_part(), M1.algebra};
}

VerificationReport rank1_morita_check(const FunctionModule& M,
                                      const RunConfig& cfg) {
  require_weight_positive(M, "rank1_morita_check");
  if (M.algebra.variant != SubalgebraDescriptor::Variant::FULL)
    throw InvalidInput("rank1_morita_check: algebra must be FULL");
  Certificate cert = generate_Q(M.weight, cfg);
  const AnalyticElement& x = cert.stages.front().K.entries.front();
  const AnalyticElement& y = cert.stages.front().H.entries.front();

  const CircleGrid& g = M.weight.grid;
  SampledFunction xb = boundary_on(x, g);
  SampledFunction yb = boundary_on(y, g);
  double eps = 0.0;
  for (int j = 0; j < g.n; ++j) {
    const std::size_t i = static_cast<std::size_t>(j);
    const double fv = M.weight.values[i].real();
    eps = std::max(eps, std::abs(xb.values[i] * yb.values[i] - 1.0));
    eps = std::max(eps, std::abs(std::abs(xb.values[i]) / fv - 1.0));
    eps = std::max(eps, std::abs(fv * std::abs(yb.values[i]) - 1.0));
  }
  VerificationReport rep;
  rep.measurements["eps"] = eps;
  if (eps >= 1.0) rep.fail("rank-1 pairing fails (eps >= 1)");
  return rep;
}

PicardDecomposition picard_decompose(const FunctionModule& M, const MobiusMap& mobius,
                                     const RunConfig& cfg) {
  require_weight_positive(M, "picard_decompose");
  const CircleGrid& g = M.weight.grid;
  std::vector<cplx> lv(static_cast<std::size_t>(g.n));
  for (int j = 0; j < g.n; ++j)
    lv[static_cast<std::size_t>(j)] =
        std::log(M.weight.values[static_cast<std::size_t>(j)].real());
  SampledFunction v = conjugate(SampledFunction(g, std::move(lv)));

  PicardDiagnostics diag{v, {}, {}, false};
  const double range = v.max_real() - v.min_real();
  for (int lag = 1; lag <= g.n / 4; lag *= 2) {
    double omega = 0.0;
    for (int j = 0; j < g.n; ++j) {
      const double a = v.values[static_cast<std::size_t>(j)].real();
      const double b = v.values[static_cast<std::size_t>((j + lag) % g.n)].real();
      omega = std::max(omega, std::abs(a - b));
    }
    diag.lags.push_back(lag);
    diag.continuity.push_back(omega);
  }
  diag.rough = range > 0.0 && diag.continuity.front() > 0.2 * range;
  return {PicardElement{mobius, M.weight}, diag};
}

}  // namespace diskmod
