#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diskmod/algebra.hpp"
#include "diskmod/config.hpp"
#include "diskmod/hardy.hpp"

namespace diskmod {

enum class ClassTag { P, Q, QBAR_PLUS, G_CONVEX, M_TIGHT, R_E };

std::string to_string(ClassTag t);

/// Closed arc [a, b] in angle coordinates; a == b is a single point.
struct ArcInterval {
  double a;
  double b;
};

/// Finite union of closed arcs on the circle.  Degenerate arcs stand in
/// for single points.
struct PeakSetSpec {
  std::vector<ArcInterval> intervals;

  static PeakSetSpec empty_set() { return {}; }
  static PeakSetSpec points(const std::vector<double>& angles);

  bool empty() const { return intervals.empty(); }
  double total_measure() const;

  /// Angular distance from theta to the set; 2*pi when the set is empty.
  double distance(double theta) const;

  /// Union of the two arc lists.
  static PeakSetSpec unite(const PeakSetSpec& a, const PeakSetSpec& b);
};

struct CertificateStage {
  double eps;
  ATuple H;
  ATuple K;
};

struct Certificate {
  ClassTag tag;
  SampledFunction target;
  std::vector<CertificateStage> stages;
  PeakSetSpec peak_set;
  std::map<std::string, double> achieved;
};

struct VerificationReport {
  bool pass = true;
  std::vector<std::string> reasons;
  std::map<std::string, double> measurements;

  void fail(const std::string& reason) {
    pass = false;
    reasons.push_back(reason);
  }
};

/// PASS iff g is invertible in A and sup|f - |g|| / sup f <= tol_Q.
/// Throws NotStrictlyPositive when f fails its precondition.
VerificationReport verify_Q(const SampledFunction& f, const AnalyticElement& g,
                            const RunConfig& cfg = RunConfig{});

/// g = truncated outer function with |g| = f, searched over degrees
/// 16, 32, ... up to max_degree.  The returned certificate stores K = (g)
/// and H = (reciprocal outer truncation).
Certificate generate_Q(const SampledFunction& f, const RunConfig& cfg = RunConfig{});

/// Tight convex approximation checks: pairing H.K = 1, ||K||_2 near f,
/// ||H||_2 near 1/f, each within the stage eps, declining along stages.
VerificationReport verify_M(const Certificate& cert,
                            const RunConfig& cfg = RunConfig{});

/// The alternative description: (i) ||K(w)||_2 -> f, (ii) ||H(w)||_2 ->
/// 1/f, (iii) ||K(w) - H(w)* f(w)^2||_2 -> 0, plus the normalized variant
/// (iii') ||K'(w) - H'(w)*||_2 -> 0.
VerificationReport verify_M_alternative(const Certificate& cert,
                                        const RunConfig& cfg = RunConfig{});

/// Two-sided modulus bounds only (no pairing): reports the smallest eps
/// with 1 - eps <= ||K||_2^2 / f^2 <= 1 + eps and the mirrored bound for
/// f * ||H||_2.
VerificationReport verify_subequivalence(const SampledFunction& f, const ATuple& H,
                                         const ATuple& K,
                                         const RunConfig& cfg = RunConfig{});

/// One stage of the envelope pipeline: k below f in modulus, h below 1/f,
/// with k*h close to 1 away from the peak set.
struct RStage {
  double eps;
  AnalyticElement k;
  AnalyticElement h;
  double arc_budget;        // Riemann sum of |k1| over U, clamped points excluded
  bool arc_budget_met;      // whether the Riemann sum stayed below eps
  bool w_positive_inside_U; // flagged, never silently reinterpreted
  double env_slack;         // max(|k| - f, f|h| - 1) after normalization
  std::vector<ArcInterval> arcs_U;
};

/// Smoothing pipeline for one eps: minorant k1 of log f, arc cover U of
/// {k1 < -1}, majorant k2, outer factors, truncation, envelope
/// renormalization.  Guarantees are re-verified before returning.
RStage generate_R_stage(const SampledFunction& f, const PeakSetSpec& E, double eps,
                        const RunConfig& cfg = RunConfig{});

/// Runs generate_R_stage over the schedule and assembles a certificate
/// with rank-1 tuples K = (k), H = (h).
Certificate generate_R_certificate(const SampledFunction& f, const PeakSetSpec& E,
                                   const std::vector<double>& eps_schedule,
                                   const RunConfig& cfg = RunConfig{});

/// Envelope inequality on the full grid plus uniform convergence of the
/// pairing on the compact family C_delta, delta in {sqrt(eps), 2 sqrt(eps),
/// 4 sqrt(eps)} per stage.
VerificationReport verify_R(const Certificate& cert,
                            const RunConfig& cfg = RunConfig{});

}  // namespace diskmod
