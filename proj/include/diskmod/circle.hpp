#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "diskmod/errors.hpp"

namespace diskmod {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Uniform grid theta_j = 2*pi*j/n on the circle.  Points are always
/// derived from n, never stored.
struct CircleGrid {
  int n;

  explicit CircleGrid(int n_);

  double theta(int j) const { return kTwoPi * static_cast<double>(j) / n; }
  cplx point(int j) const {
    double t = theta(j);
    return {std::cos(t), std::sin(t)};
  }
  bool operator==(const CircleGrid& o) const { return n == o.n; }
};

bool is_power_of_two(int n);

struct DiskPoint {
  cplx z;
  DiskPoint() : z(0.0) {}
  explicit DiskPoint(cplx z_);
  DiskPoint(double re, double im) : DiskPoint(cplx(re, im)) {}
};

/// Complex (or real) samples at the n grid points.
struct SampledFunction {
  CircleGrid grid;
  std::vector<cplx> values;

  SampledFunction(const CircleGrid& g, std::vector<cplx> v);

  static SampledFunction from_fn(const CircleGrid& g,
                                 const std::function<cplx(double)>& f);
  static SampledFunction constant(const CircleGrid& g, cplx c);

  bool is_real(double tol = 0.0) const;
  double min_real() const;
  double max_real() const;
  double min_abs() const;
  double max_abs() const;

  SampledFunction real_part() const;
  SampledFunction pointwise_mul(const SampledFunction& o) const;
  SampledFunction pointwise_div(const SampledFunction& o) const;
  SampledFunction pointwise_add(const SampledFunction& o) const;
  SampledFunction pointwise_sub(const SampledFunction& o) const;
  SampledFunction scaled(cplx c) const;
  SampledFunction abs() const;
  cplx mean() const;
};

/// Coefficients for indices -n/2 .. n/2-1; index k lives at slot k + n/2.
struct FourierCoefficients {
  int n;
  std::vector<cplx> c;

  cplx& at(int k) { return c[static_cast<std::size_t>(k + n / 2)]; }
  const cplx& at(int k) const { return c[static_cast<std::size_t>(k + n / 2)]; }
};

/// In-place radix-2 FFT; sign = -1 forward, +1 inverse (unnormalized).
void fft_radix2(std::vector<cplx>& a, int sign);

FourierCoefficients fft_analysis(const SampledFunction& f);
SampledFunction fft_synthesis(const FourierCoefficients& coeffs);

/// Trigonometric interpolation of f onto an oversample*n grid by
/// zero-padding the spectrum.
SampledFunction resample(const SampledFunction& f, int oversample);

double sup_norm(const SampledFunction& f, int oversample);

/// Total phase increment / 2*pi on the oversampled grid.  Throws
/// ZeroOnGrid when min |g| falls below tau_zero * (1 + sup_norm(g)).
int winding_number(const SampledFunction& g, int oversample = 4,
                   double tau_zero = 1e-10);

/// Quadrature average of f over the circle |z - center| = radius, which
/// must stay inside the open unit disk.
cplx mean_on_circle(const std::function<cplx(cplx)>& f, const DiskPoint& center,
                    double radius, int quadrature_points = 256);

}  // namespace diskmod
