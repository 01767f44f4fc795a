#include "diskmod/algebra.hpp"

#include <cmath>

namespace diskmod {

AnalyticElement::AnalyticElement(std::vector<cplx> c) : coeffs(std::move(c)) {
  if (coeffs.empty()) coeffs.push_back(cplx(0.0));
}

cplx AnalyticElement::evaluate(const DiskPoint& z) const {
  cplx acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z.z + coeffs[i];
  return acc;
}

SampledFunction AnalyticElement::boundary_samples(const CircleGrid& g) const {
  if (degree() >= g.n / 2)
    throw InvalidInput("AnalyticElement: degree must be < n/2 for this grid");
  FourierCoefficients c;
  c.n = g.n;
  c.c.assign(static_cast<std::size_t>(g.n), cplx(0.0));
  for (int k = 0; k <= degree(); ++k) c.at(k) = coeffs[static_cast<std::size_t>(k)];
  return fft_synthesis(c);
}

AnalyticElement AnalyticElement::operator*(const AnalyticElement& o) const {
  std::vector<cplx> out(coeffs.size() + o.coeffs.size() - 1, cplx(0.0));
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs.size(); ++j)
      out[i + j] += coeffs[i] * o.coeffs[j];
  return AnalyticElement(std::move(out));
}

AnalyticElement AnalyticElement::operator+(const AnalyticElement& o) const {
  std::vector<cplx> out(std::max(coeffs.size(), o.coeffs.size()), cplx(0.0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] += coeffs[i];
  for (std::size_t i = 0; i < o.coeffs.size(); ++i) out[i] += o.coeffs[i];
  return AnalyticElement(std::move(out));
}

AnalyticElement AnalyticElement::operator-(const AnalyticElement& o) const {
  return *this + o.scaled(-1.0);
}

AnalyticElement AnalyticElement::scaled(cplx c) const {
  std::vector<cplx> out = coeffs;
  for (cplx& v : out) v *= c;
  return AnalyticElement(std::move(out));
}

AnalyticElement AnalyticElement::monomial(int k, cplx c) {
  std::vector<cplx> out(static_cast<std::size_t>(k) + 1, cplx(0.0));
  out.back() = c;
  return AnalyticElement(std::move(out));
}

AnalyticElement AnalyticElement::exp_series(cplx c, int degree) {
  std::vector<cplx> out(static_cast<std::size_t>(degree) + 1);
  cplx term = 1.0;
  out[0] = term;
  for (int k = 1; k <= degree; ++k) {
    term *= c / static_cast<double>(k);
    out[static_cast<std::size_t>(k)] = term;
  }
  return AnalyticElement(std::move(out));
}

double sup_norm(const AnalyticElement& a, int grid_n, int oversample) {
  int n = grid_n;
  while (a.degree() >= n / 2) n *= 2;
  return sup_norm(a.boundary_samples(CircleGrid(n)), oversample);
}

SampledFunction boundary_on(const AnalyticElement& a, const CircleGrid& g) {
  int m = g.n;
  while (a.degree() >= m / 2) m *= 2;
  if (m == g.n) return a.boundary_samples(g);
  SampledFunction fine = a.boundary_samples(CircleGrid(m));
  const int stride = m / g.n;
  std::vector<cplx> v(static_cast<std::size_t>(g.n));
  for (int j = 0; j < g.n; ++j)
    v[static_cast<std::size_t>(j)] = fine.values[static_cast<std::size_t>(j * stride)];
  return {g, std::move(v)};
}

AnalyticElement project_to_analytic(const SampledFunction& boundary, int degree,
                                    double* leakage) {
  FourierCoefficients c = fft_analysis(boundary);
  if (degree >= c.n / 2) degree = c.n / 2 - 1;
  std::vector<cplx> coeffs(static_cast<std::size_t>(degree) + 1);
  double kept = 0.0, total = 0.0;
  for (int k = -c.n / 2; k < c.n / 2; ++k) {
    const double e = std::norm(c.at(k));
    total += e;
    if (k >= 0 && k <= degree) {
      coeffs[static_cast<std::size_t>(k)] = c.at(k);
      kept += e;
    }
  }
  if (leakage) *leakage = (total == 0.0) ? 0.0 : (total - kept) / total;
  return AnalyticElement(std::move(coeffs));
}

ATuple::ATuple(std::vector<AnalyticElement> e) : entries(std::move(e)) {
  if (entries.empty()) throw InvalidInput("ATuple: must be nonempty");
}

std::vector<cplx> ATuple::value_at(const DiskPoint& z) const {
  std::vector<cplx> v;
  v.reserve(entries.size());
  for (const AnalyticElement& a : entries) v.push_back(a.evaluate(z));
  return v;
}

double ATuple::norm_at(const DiskPoint& z) const {
  double s = 0.0;
  for (const AnalyticElement& a : entries) s += std::norm(a.evaluate(z));
  return std::sqrt(s);
}

SampledFunction tuple_pointwise_norm(const ATuple& h, const CircleGrid& g) {
  std::vector<double> acc(static_cast<std::size_t>(g.n), 0.0);
  for (const AnalyticElement& a : h.entries) {
    SampledFunction b = a.boundary_samples(g);
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += std::norm(b.values[j]);
  }
  std::vector<cplx> out(acc.size());
  for (std::size_t j = 0; j < acc.size(); ++j) out[j] = std::sqrt(acc[j]);
  return {g, std::move(out)};
}

SampledFunction tuple_dot(const ATuple& h, const ATuple& k, const CircleGrid& g) {
  if (h.length() != k.length())
    throw InvalidInput("tuple_dot: tuples must have equal length");
  std::vector<cplx> acc(static_cast<std::size_t>(g.n), cplx(0.0));
  for (int i = 0; i < h.length(); ++i) {
    SampledFunction bh = h.entries[static_cast<std::size_t>(i)].boundary_samples(g);
    SampledFunction bk = k.entries[static_cast<std::size_t>(i)].boundary_samples(g);
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += bh.values[j] * bk.values[j];
  }
  return {g, std::move(acc)};
}

SubalgebraDescriptor SubalgebraDescriptor::two_point(const DiskPoint& w1,
                                                     const DiskPoint& w2) {
  if (std::abs(w1.z - w2.z) == 0.0)
    throw InvalidInput("SubalgebraDescriptor: two-point constraint needs w1 != w2");
  SubalgebraDescriptor s;
  s.variant = Variant::TWO_POINT;
  s.w1 = w1;
  s.w2 = w2;
  return s;
}

InvertibilityResult is_invertible(const AnalyticElement& a, const RunConfig& cfg) {
  int n = cfg.grid_n;
  while (a.degree() >= n / 2) n *= 2;
  SampledFunction b = resample(a.boundary_samples(CircleGrid(n)), cfg.oversample);
  const double sup = b.max_abs();
  const double margin = b.min_abs();
  const double tau_zero = cfg.tol.tau_zero * (1.0 + sup);
  const double tau_inv = cfg.tol.tau_inv * (1.0 + sup);
  if (margin <= tau_zero) return {false, margin, 0};
  if (margin < tau_inv)
    throw Inconclusive("is_invertible: min |a| inside the inconclusive band");
  const int w = winding_number(b, 1, cfg.tol.tau_zero);
  return {w == 0, margin, w};
}

bool belongs_to_subalgebra(const AnalyticElement& a, const SubalgebraDescriptor& s,
                           double tau_eq) {
  if (s.variant == SubalgebraDescriptor::Variant::FULL) return true;
  const double gap = std::abs(a.evaluate(s.w1) - a.evaluate(s.w2));
  return gap <= tau_eq * (1.0 + sup_norm(a));
}

AnalyticElement constrained_projection(const AnalyticElement& a,
                                       const SubalgebraDescriptor& s) {
  if (s.variant != SubalgebraDescriptor::Variant::TWO_POINT)
    throw InvalidInput("constrained_projection: descriptor must be TWO_POINT");
  // b(z) = z / (w1 - w2) satisfies b(w1) - b(w2) = 1.
  AnalyticElement b = AnalyticElement::monomial(1, 1.0 / (s.w1.z - s.w2.z));
  const cplx lambda = -(a.evaluate(s.w1) - a.evaluate(s.w2));
  return a + b.scaled(lambda);
}

std::vector<DiskPoint> interior_test_lattice() {
  static const double radii[] = {0.25, 0.5, 0.75, 0.9, 0.99};
  std::vector<DiskPoint> pts;
  pts.reserve(5 * 64);
  for (double r : radii)
    for (int j = 0; j < 64; ++j) {
      double t = kTwoPi * j / 64.0;
      pts.push_back(DiskPoint(cplx(r * std::cos(t), r * std::sin(t))));
    }
  return pts;
}

}  // namespace diskmod
