#pragma once

#include <cstdint>

namespace diskmod {

/// Tolerances shared across the certificate machinery.  Every verifier
/// reports the tolerance it tested at, so these are defaults, not magic.
struct Tolerances {
  double tol_Q = 1e-6;        // relative sup tolerance for Q certificates
  double tau_eq = 1e-9;       // two-point equality, scaled by (1 + sup norm)
  double tau_part = 1e-3;     // Gleason part threshold: same part iff norm < 2 - tau_part
  double tau_inv = 1e-6;      // invertibility margin, scaled by (1 + sup norm)
  double tau_zero = 1e-10;    // refuse winding below this, scaled by (1 + sup norm)
  double m_clamp = 30.0;      // logs clamped at -m_clamp before transforms
  double tol_logint = 1e-3;   // cutoff-difference threshold for the log-integrability verdict
  double analyticity_tol = 1e-8;  // admissible negative-frequency energy fraction
  double tau_smile = 1e-6;    // endpoint tolerance for smile maps
};

struct RunConfig {
  int grid_n = 1024;        // power of two, >= 16
  int oversample = 4;
  int max_degree = 4096;    // power of two
  Tolerances tol;
  std::uint64_t seed = 20240817ULL;
};

}  // namespace diskmod
