#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "diskmod/certificates.hpp"

namespace diskmod {

/// Disk automorphism z -> lambda * (z - a) / (1 - conj(a) z).
struct MobiusMap {
  DiskPoint a;
  cplx lambda = 1.0;

  static MobiusMap identity() { return {}; }
  cplx apply(cplx z) const;
  bool is_identity() const;
};

/// Weighted module Af: a boundary weight plus the acting subalgebra.
struct FunctionModule {
  SampledFunction weight;
  SubalgebraDescriptor algebra;
};

struct ModuleMap {
  MobiusMap mobius;
  AnalyticElement multiplier;
};

struct PicardElement {
  MobiusMap mobius;
  SampledFunction weight_class;
};

/// sup |a * f| on the oversampled boundary grid.
double module_norm(const AnalyticElement& a, const FunctionModule& M,
                   const RunConfig& cfg = RunConfig{});

enum class IsometryVerdict { ISOMETRIC, INCONCLUSIVE };

struct IsometryDecision {
  IsometryVerdict verdict;
  std::optional<AnalyticElement> witness;
  double residual;
  bool negative_hint = false;
  double obstruction = 0.0;
};

/// Cor.-style decision: ISOMETRIC iff a Q witness for f1/f2 is found.
/// Failures are INCONCLUSIVE, optionally with a NEGATIVE_HINT when the
/// integral and witness routes for the log mean disagree badly.
IsometryDecision decide_isometric(const FunctionModule& M1, const FunctionModule& M2,
                                  const RunConfig& cfg = RunConfig{});

/// Resamples a at phi(grid) and re-projects onto analytic coefficients.
/// Negative-frequency leakage above analyticity_tol is reported through
/// the optional warning flag.
AnalyticElement compose_with_mobius(const AnalyticElement& a, const MobiusMap& phi,
                                    const RunConfig& cfg = RunConfig{},
                                    bool* leakage_warning = nullptr);

/// T(a f1) = (a o phi) * h * f2 as boundary samples on f2's grid.
struct CanonicalIsometry {
  std::function<SampledFunction(const AnalyticElement&)> apply;
};

CanonicalIsometry build_canonical_isometry(const FunctionModule& M1,
                                           const FunctionModule& M2,
                                           const ModuleMap& map,
                                           const RunConfig& cfg = RunConfig{});

/// Pointwise product of weights (normal form of the module tensor).
FunctionModule tensor_weight(const FunctionModule& M1, const FunctionModule& M2);

/// Rank-1 equivalence witness from the Q generator; reports the achieved
/// eps in the pairing and the two modulus bounds.
VerificationReport rank1_morita_check(const FunctionModule& M,
                                      const RunConfig& cfg = RunConfig{});

struct PicardDiagnostics {
  SampledFunction conjugate_profile;
  std::vector<int> lags;             // in grid cells
  std::vector<double> continuity;    // sup |v(theta + lag) - v(theta)|
  bool rough;                        // heuristic roughness flag
  bool heuristic = true;
};

struct PicardDecomposition {
  PicardElement element;
  PicardDiagnostics diagnostics;
};

/// Stores the Mobius part verbatim and the weight as a coset
/// representative; coset equality itself is not decidable at finite grid
/// resolution, so only a roughness diagnostic of the harmonic conjugate
/// of log f is attached.
PicardDecomposition picard_decompose(const FunctionModule& M, const MobiusMap& mobius,
                                     const RunConfig& cfg = RunConfig{});

}  // namespace diskmod
