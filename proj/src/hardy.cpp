#include "diskmod/hardy.hpp"

#include <cmath>
#include <limits>

namespace diskmod {

SampledFunction conjugate(const SampledFunction& u) {
  if (!u.is_real(1e-12 * (1.0 + u.max_abs())))
    throw InvalidInput("conjugate: input must be real");
  const int n = u.grid.n;
  FourierCoefficients c = fft_analysis(u.real_part());
  FourierCoefficients out;
  out.n = n;
  out.c.assign(static_cast<std::size_t>(n), cplx(0.0));
  const cplx mi(0.0, -1.0);
  for (int k = 1; k < n / 2; ++k) {
    out.at(k) = mi * c.at(k);
    out.at(-k) = -mi * c.at(-k);
  }
  // k = 0 and the unpaired Nyquist mode are dropped to keep the result real.
  SampledFunction v = fft_synthesis(out);
  return v.real_part();
}

cplx herglotz(const SampledFunction& u, const DiskPoint& z) {
  if (std::abs(z.z) >= 1.0)
    throw BoundaryEvaluation(
        "herglotz: |z| must be < 1; boundary values come from outer_boundary");
  const int n = u.grid.n;
  cplx s = 0.0;
  for (int j = 0; j < n; ++j) {
    const cplx w = u.grid.point(j);
    s += (w + z.z) / (w - z.z) * u.values[static_cast<std::size_t>(j)];
  }
  return s / static_cast<double>(n);
}

double poisson_extension(const SampledFunction& u, const DiskPoint& z) {
  return herglotz(u, z).real();
}

SampledFunction outer_boundary(const SampledFunction& logmod) {
  SampledFunction v = conjugate(logmod);
  const int n = logmod.grid.n;
  std::vector<cplx> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const std::size_t s = static_cast<std::size_t>(j);
    out[s] = std::exp(cplx(logmod.values[s].real(), v.values[s].real()));
  }
  return {logmod.grid, std::move(out)};
}

double negative_frequency_energy_fraction(const SampledFunction& f) {
  FourierCoefficients c = fft_analysis(f);
  double neg = 0.0, total = 0.0;
  for (int k = -c.n / 2; k < c.n / 2; ++k) {
    const double e = std::norm(c.at(k));
    total += e;
    if (k < 0) neg += e;
  }
  return (total == 0.0) ? 0.0 : neg / total;
}

HarmonicExtension make_harmonic_extension(const SampledFunction& u) {
  SampledFunction boundary = u.real_part();
  return {boundary,
          [boundary](DiskPoint z) { return poisson_extension(boundary, z); }};
}

LogIntegrabilityDiagnosis log_integrability(const SampledFunction& f,
                                            const std::vector<double>& cutoffs,
                                            double tol_logint) {
  if (f.max_abs() == 0.0) throw AllZero("log_integrability: f is identically 0");
  if (!f.is_real(1e-12 * (1.0 + f.max_abs())) || f.min_real() < 0.0)
    throw InvalidInput("log_integrability: f must be real and nonnegative");
  if (cutoffs.size() < 2)
    throw InvalidInput("log_integrability: need at least two cutoffs");

  LogIntegrabilityDiagnosis d;
  d.cutoffs = cutoffs;
  // Cells where f vanishes exactly carry no cutoff information; they are
  // excluded from the means and counted separately.  A peak set of measure
  // zero touches only isolated cells, so a large excluded fraction is
  // itself evidence against log integrability.
  const double floor = 1e-12 * (1.0 + f.max_real());
  int zero_cells = 0;
  for (const cplx& v : f.values)
    if (v.real() <= floor) ++zero_cells;
  const int live = static_cast<int>(f.values.size()) - zero_cells;
  for (double M : cutoffs) {
    double s = 0.0;
    for (const cplx& v : f.values)
      if (v.real() > floor) s += std::max(std::log(v.real()), -M);
    d.means.push_back(live > 0 ? s / live : 0.0);
  }
  bool integrable =
      zero_cells <= static_cast<int>(0.02 * f.values.size()) && live > 0;
  for (std::size_t i = 1; i < d.means.size(); ++i)
    if (std::abs(d.means[i] - d.means[i - 1]) >= tol_logint) integrable = false;
  d.verdict = integrable ? LogIntegrabilityVerdict::INTEGRABLE
                         : LogIntegrabilityVerdict::DIVERGENT_SUSPECTED;
  return d;
}

std::string to_string(LogIntegrabilityVerdict v) {
  return v == LogIntegrabilityVerdict::INTEGRABLE ? "INTEGRABLE"
                                                  : "DIVERGENT_SUSPECTED";
}

}  // namespace diskmod
