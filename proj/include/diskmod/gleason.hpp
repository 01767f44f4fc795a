#pragma once

#include <string>
#include <vector>

#include "diskmod/certificates.hpp"

namespace diskmod {

struct PartDistance {
  DiskPoint w1, w2;
  double pseudo_rho;       // |w1 - w2| / |1 - conj(w1) w2| for interior pairs
  double functional_norm;  // brute-force sup over the degree-1 Blaschke family
  bool same_part;          // functional_norm < 2 - tau_part
  double challenge_excess; // best random-polynomial value minus the Blaschke value
};

/// Brute-force evaluation-functional distance: the Blaschke family
/// a(z) = lambda (z - c)/(1 - conj(c) z) searched over a polar c-lattice
/// with local refinement, cross-checked against random degree-8
/// polynomials normalized to unit sup norm.
PartDistance functional_distance(const DiskPoint& w1, const DiskPoint& w2,
                                 const RunConfig& cfg = RunConfig{});

struct SmileMap {
  int n;
  AnalyticElement r;
};

/// Polynomial r with r(1) = 1, r(-1) = -1 and modulus inside
/// [1 - 1/n, 1 + 1/n] on the test lattice and oversampled boundary.
/// Construction: log-modulus profile switching sign across two boundary
/// transition windows, window width tuned so the conjugate phase swings
/// by exactly pi between 1 and -1.  Contract-verified; throws
/// ConstructionFailure when no degree <= max_degree passes, which at
/// desk scale happens for all but small n.
SmileMap build_smile_map(int n, const RunConfig& cfg = RunConfig{});

/// Certificate stages |b_m G| -> |G| with b_m G invertible in the
/// two-point subalgebra, for points in different Gleason parts.
Certificate two_point_qbar_certificate(const DiskPoint& w1, const DiskPoint& w2,
                                       const AnalyticElement& G,
                                       const std::vector<int>& n_schedule,
                                       const RunConfig& cfg = RunConfig{});

struct ObstructionReport {
  double c;                  // claimed tightness constant
  double measured_c;         // measured from the supplied tuples
  double defect;             // || Theta(w2) - Pi(w2)* ||_2 after phase alignment
  double lower_bound_L;      // implied lower bound on ||w2 - w1||
  double functional_dist;    // brute-force distance
  std::string verdict;       // "CONSISTENT" or "VIOLATION"
};

/// L(c) = (2/c - sqrt(2 c^2 - 2)) / c, the chain's implied lower bound
/// on the functional distance.
double obstruction_lower_bound(double c);

/// Recomputes the proof chain on a supplied tightness candidate and
/// compares the implied bound with the brute-force distance.
ObstructionReport morita_obstruction(const ATuple& H, const ATuple& K, double c,
                                     const DiskPoint& w1, const DiskPoint& w2,
                                     const AnalyticElement& G,
                                     const RunConfig& cfg = RunConfig{});

}  // namespace diskmod
