#include "diskmod/circle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace diskmod {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

CircleGrid::CircleGrid(int n_) : n(n_) {
  if (n < 16 || !is_power_of_two(n))
    throw InvalidInput("CircleGrid: n must be a power of two, n >= 16 (got " +
                       std::to_string(n_) + ")");
}

DiskPoint::DiskPoint(cplx z_) : z(z_) {
  if (std::abs(z_) > 1.0 + 1e-12)
    throw RadiusOutOfDomain("DiskPoint: |z| must be <= 1");
}

SampledFunction::SampledFunction(const CircleGrid& g, std::vector<cplx> v)
    : grid(g), values(std::move(v)) {
  if (values.size() != static_cast<std::size_t>(grid.n))
    throw InvalidInput("SampledFunction: values length must equal grid.n");
}

SampledFunction SampledFunction::from_fn(const CircleGrid& g,
                                         const std::function<cplx(double)>& f) {
  std::vector<cplx> v(static_cast<std::size_t>(g.n));
  for (int j = 0; j < g.n; ++j) v[static_cast<std::size_t>(j)] = f(g.theta(j));
  return {g, std::move(v)};
}

SampledFunction SampledFunction::constant(const CircleGrid& g, cplx c) {
  return {g, std::vector<cplx>(static_cast<std::size_t>(g.n), c)};
}

bool SampledFunction::is_real(double tol) const {
  for (const cplx& v : values)
    if (std::abs(v.imag()) > tol) return false;
  return true;
}

double SampledFunction::min_real() const {
  double m = values[0].real();
  for (const cplx& v : values) m = std::min(m, v.real());
  return m;
}

double SampledFunction::max_real() const {
  double m = values[0].real();
  for (const cplx& v : values) m = std::max(m, v.real());
  return m;
}

double SampledFunction::min_abs() const {
  double m = std::abs(values[0]);
  for (const cplx& v : values) m = std::min(m, std::abs(v));
  return m;
}

double SampledFunction::max_abs() const {
  double m = 0.0;
  for (const cplx& v : values) m = std::max(m, std::abs(v));
  return m;
}

SampledFunction SampledFunction::real_part() const {
  std::vector<cplx> v(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) v[j] = values[j].real();
  return {grid, std::move(v)};
}

static void check_same_grid(const SampledFunction& a, const SampledFunction& b) {
  if (!(a.grid == b.grid))
    throw InvalidInput("SampledFunction: operands live on different grids");
}

SampledFunction SampledFunction::pointwise_mul(const SampledFunction& o) const {
  check_same_grid(*this, o);
  std::vector<cplx> v(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) v[j] = values[j] * o.values[j];
  return {grid, std::move(v)};
}

SampledFunction SampledFunction::pointwise_div(const SampledFunction& o) const {
  check_same_grid(*this, o);
  std::vector<cplx> v(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) v[j] = values[j] / o.values[j];
  return {grid, std::move(v)};
}

SampledFunction SampledFunction::pointwise_add(const SampledFunction& o) const {
  check_same_grid(*this, o);
  std::vector<cplx> v(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) v[j] = values[j] + o.values[j];
  return {grid, std::move(v)};
}

SampledFunction SampledFunction::pointwise_sub(const SampledFunction& o) const {
  check_same_grid(*this, o);
  std::vector<cplx> v(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) v[j] = values[j] - o.values[j];
  return {grid, std::move(v)};
}

SampledFunction SampledFunction::scaled(cplx c) const {
  std::vector<cplx> v(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) v[j] = c * values[j];
  return {grid, std::move(v)};
}

SampledFunction SampledFunction::abs() const {
  std::vector<cplx> v(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) v[j] = std::abs(values[j]);
  return {grid, std::move(v)};
}

cplx SampledFunction::mean() const {
  cplx s = 0.0;
  for (const cplx& v : values) s += v;
  return s / static_cast<double>(values.size());
}

void fft_radix2(std::vector<cplx>& a, int sign) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * kTwoPi / static_cast<double>(len);
    const cplx wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cplx w = 1.0;
      for (std::size_t k = 0; k < len / 2; ++k) {
        cplx u = a[i + k];
        cplx v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

FourierCoefficients fft_analysis(const SampledFunction& f) {
  const int n = f.grid.n;
  std::vector<cplx> a = f.values;
  fft_radix2(a, -1);
  FourierCoefficients out;
  out.n = n;
  out.c.resize(static_cast<std::size_t>(n));
  const double inv = 1.0 / n;
  // a[m] holds frequency m for m < n/2 and m - n for m >= n/2.
  for (int m = 0; m < n; ++m) {
    int k = (m < n / 2) ? m : m - n;
    out.at(k) = a[static_cast<std::size_t>(m)] * inv;
  }
  return out;
}

SampledFunction fft_synthesis(const FourierCoefficients& coeffs) {
  const int n = coeffs.n;
  std::vector<cplx> a(static_cast<std::size_t>(n));
  for (int k = -n / 2; k < n / 2; ++k) {
    int m = (k >= 0) ? k : k + n;
    a[static_cast<std::size_t>(m)] = coeffs.at(k);
  }
  fft_radix2(a, +1);
  return {CircleGrid(n), std::move(a)};
}

SampledFunction resample(const SampledFunction& f, int oversample) {
  if (oversample < 1) throw InvalidInput("resample: oversample must be >= 1");
  if (oversample == 1) return f;
  const int n = f.grid.n;
  const int m = n * oversample;
  FourierCoefficients coeffs = fft_analysis(f);
  FourierCoefficients padded;
  padded.n = m;
  padded.c.assign(static_cast<std::size_t>(m), cplx(0.0));
  for (int k = -n / 2; k < n / 2; ++k) padded.at(k) = coeffs.at(k);
  return fft_synthesis(padded);
}

double sup_norm(const SampledFunction& f, int oversample) {
  if (oversample < 1) throw InvalidInput("sup_norm: oversample must be >= 1");
  double base = f.max_abs();
  if (oversample == 1) return base;
  return std::max(base, resample(f, oversample).max_abs());
}

int winding_number(const SampledFunction& g, int oversample, double tau_zero) {
  SampledFunction fine = resample(g, oversample);
  const double floor_abs = tau_zero * (1.0 + fine.max_abs());
  if (fine.min_abs() <= floor_abs)
    throw ZeroOnGrid("winding_number: |g| falls below the zero tolerance");
  const std::size_t m = fine.values.size();
  double total = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const cplx cur = fine.values[j];
    const cplx nxt = fine.values[(j + 1) % m];
    total += std::arg(nxt / cur);
  }
  const double w = total / kTwoPi;
  const int rounded = static_cast<int>(std::lround(w));
  if (std::abs(w - rounded) > 0.25)
    throw ZeroOnGrid("winding_number: phase unwrapping did not close to an integer");
  return rounded;
}

cplx mean_on_circle(const std::function<cplx(cplx)>& f, const DiskPoint& center,
                    double radius, int quadrature_points) {
  if (radius < 0.0 || std::abs(center.z) + radius >= 1.0)
    throw RadiusOutOfDomain(
        "mean_on_circle: closed disk of given center/radius must lie in the open unit disk");
  cplx s = 0.0;
  for (int j = 0; j < quadrature_points; ++j) {
    double t = kTwoPi * j / quadrature_points;
    s += f(center.z + radius * cplx(std::cos(t), std::sin(t)));
  }
  return s / static_cast<double>(quadrature_points);
}

}  // namespace diskmod
