#pragma once

#include <optional>
#include <vector>

#include "diskmod/circle.hpp"
#include "diskmod/config.hpp"

namespace diskmod {

/// A disk-algebra element as a finite nonnegative-frequency coefficient
/// vector c0..cd.
struct AnalyticElement {
  std::vector<cplx> coeffs;

  AnalyticElement() : coeffs{cplx(0.0)} {}
  explicit AnalyticElement(std::vector<cplx> c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  /// Horner evaluation at |z| <= 1.
  cplx evaluate(const DiskPoint& z) const;

  /// Boundary samples on the given grid via FFT synthesis.
  SampledFunction boundary_samples(const CircleGrid& g) const;

  AnalyticElement operator*(const AnalyticElement& o) const;
  AnalyticElement operator+(const AnalyticElement& o) const;
  AnalyticElement operator-(const AnalyticElement& o) const;
  AnalyticElement scaled(cplx c) const;

  static AnalyticElement monomial(int k, cplx c = 1.0);

  /// Truncated power series of exp(c*z).
  static AnalyticElement exp_series(cplx c, int degree);
};

double sup_norm(const AnalyticElement& a, int grid_n = 1024, int oversample = 4);

/// Boundary values of a on an arbitrary grid, including grids with
/// n <= 2*degree: synthesis happens on a fine refinement and the result
/// is subsampled, so values at the n grid points are exact.
SampledFunction boundary_on(const AnalyticElement& a, const CircleGrid& g);

/// Project boundary samples onto coefficients 0..degree.  The dropped
/// negative-frequency energy fraction is returned through leakage when
/// requested.
AnalyticElement project_to_analytic(const SampledFunction& boundary, int degree,
                                    double* leakage = nullptr);

struct ATuple {
  std::vector<AnalyticElement> entries;

  explicit ATuple(std::vector<AnalyticElement> e);
  int length() const { return static_cast<int>(entries.size()); }

  std::vector<cplx> value_at(const DiskPoint& z) const;
  double norm_at(const DiskPoint& z) const;
};

/// Pointwise Euclidean norm ||H(e^{i theta})||_2 on the grid.
SampledFunction tuple_pointwise_norm(const ATuple& h, const CircleGrid& g);

/// Pointwise dot product (H.K)(e^{i theta}) on the grid.
SampledFunction tuple_dot(const ATuple& h, const ATuple& k, const CircleGrid& g);

struct SubalgebraDescriptor {
  enum class Variant { FULL, TWO_POINT };
  Variant variant = Variant::FULL;
  DiskPoint w1, w2;

  static SubalgebraDescriptor full() { return {}; }
  static SubalgebraDescriptor two_point(const DiskPoint& w1, const DiskPoint& w2);
};

struct InvertibilityResult {
  bool invertible;
  double margin;  // min |a| on the oversampled boundary
  int winding;    // defined only when the margin is above tau_zero
};

/// Certifies no zeros in the closed disk: min |a| > tau_inv on the
/// oversampled boundary and winding 0.  Throws Inconclusive inside the
/// [tau_zero, tau_inv) band.
InvertibilityResult is_invertible(const AnalyticElement& a,
                                  const RunConfig& cfg = RunConfig{});

bool belongs_to_subalgebra(const AnalyticElement& a, const SubalgebraDescriptor& s,
                           double tau_eq = 1e-9);

/// a + lambda*b with b a degree-1 corrector, chosen so the result takes
/// equal values at the two constrained points.
AnalyticElement constrained_projection(const AnalyticElement& a,
                                       const SubalgebraDescriptor& s);

/// Fixed interior lattice |z| in {0.25, 0.5, 0.75, 0.9, 0.99} x 64 angles.
std::vector<DiskPoint> interior_test_lattice();

}  // namespace diskmod
