#pragma once

#include <functional>
#include <string>
#include <vector>

#include "diskmod/circle.hpp"

namespace diskmod {

/// Harmonic conjugate via the Fourier multiplier -i*sign(k), zero at k = 0
/// and at the Nyquist mode.  Input must be real.
SampledFunction conjugate(const SampledFunction& u);

/// Herglotz integral (1/2pi) int (e^{it}+z)/(e^{it}-z) u(t) dt by trapezoid
/// quadrature.  Real part is the Poisson extension of u.  |z| < 1 required.
cplx herglotz(const SampledFunction& u, const DiskPoint& z);

double poisson_extension(const SampledFunction& u, const DiskPoint& z);

/// exp(logmod + i*conjugate(logmod)): boundary values of the outer function
/// with modulus exp(logmod).
SampledFunction outer_boundary(const SampledFunction& logmod);

/// Fraction of spectral energy carried by negative frequencies.
double negative_frequency_energy_fraction(const SampledFunction& f);

/// Poisson extension of a real boundary function, bundled with its
/// boundary samples.
struct HarmonicExtension {
  SampledFunction boundary;
  std::function<double(DiskPoint)> evaluator;
};

HarmonicExtension make_harmonic_extension(const SampledFunction& u);

enum class LogIntegrabilityVerdict { INTEGRABLE, DIVERGENT_SUSPECTED };

/// Heuristic cutoff diagnosis of whether log f is integrable on the circle.
struct LogIntegrabilityDiagnosis {
  std::vector<double> cutoffs;
  std::vector<double> means;  // mean of max(log f, -M) per cutoff
  LogIntegrabilityVerdict verdict;
  bool heuristic = true;
};

LogIntegrabilityDiagnosis log_integrability(const SampledFunction& f,
                                            const std::vector<double>& cutoffs,
                                            double tol_logint = 1e-3);

std::string to_string(LogIntegrabilityVerdict v);

}  // namespace diskmod
