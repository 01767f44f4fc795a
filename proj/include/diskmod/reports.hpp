#pragma once

#include <string>
#include <vector>

#include "diskmod/json_io.hpp"

namespace diskmod {

inline constexpr const char* kSchemaVersion = "1.0";
inline constexpr const char* kArtifactVersion = "0.1.0";

/// Exit-code conventions shared by the CLI and the corpus runner.
enum ExitCode {
  kExitPass = 0,
  kExitInconclusive = 2,
  kExitFail = 3,
  kExitInputError = 4,
};

struct Report {
  std::string command;
  RunConfig config;
  json inputs = json::object();
  json results = json::object();
  int exit_code = kExitPass;

  /// Full report body with schema_version and provenance at top level.
  json body() const;
  std::string dump() const;
};

Report cmd_outer(const SampledFunction& f, const RunConfig& cfg = RunConfig{});

Report cmd_certify(ClassTag tag, const SampledFunction& f,
                   const std::vector<double>& eps_schedule,
                   const PeakSetSpec& peak_set = PeakSetSpec::empty_set(),
                   const RunConfig& cfg = RunConfig{});

Report cmd_isometry(const SampledFunction& f1, const SampledFunction& f2,
                    const RunConfig& cfg = RunConfig{});

/// Without G: distances only.  With G: the full two-point dichotomy run.
Report cmd_gleason(const DiskPoint& w1, const DiskPoint& w2,
                   const AnalyticElement* G = nullptr,
                   const std::vector<int>& n_schedule = {4, 8, 16},
                   const RunConfig& cfg = RunConfig{});

Report cmd_morita_two_point(const ATuple& H, const ATuple& K, double c,
                            const DiskPoint& w1, const DiskPoint& w2,
                            const AnalyticElement& G,
                            const RunConfig& cfg = RunConfig{});

Report cmd_picard(const SampledFunction& f, const MobiusMap& mobius,
                  const RunConfig& cfg = RunConfig{});

/// Writes theta-indexed CSVs for certificate reports: one file per stage
/// (theta, f, K_norm, H_inv_norm, e_m) plus a stage summary.  Reports
/// without stages get the summary only.  Returns the written paths.
std::vector<std::string> emit_plot_data(const Report& report,
                                        const std::string& out_dir);

struct CorpusResult {
  std::vector<std::string> names;
  std::vector<bool> passed;
  std::vector<std::string> files;
  bool all_passed() const;
};

/// Reruns the shipped headline instances and writes one report file per
/// instance into out_dir.  Deterministic for a fixed config.
CorpusResult run_corpus(const std::string& out_dir,
                        const RunConfig& cfg = RunConfig{});

}  // namespace diskmod
