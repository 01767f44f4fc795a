#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "diskmod/reports.hpp"

using namespace diskmod;

namespace {

SampledFunction load_function(const std::string& file, const std::string& preset,
                              int n) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw InvalidInput("cannot open " + file);
    json j;
    in >> j;
    return sampled_from_json(j);
  }
  CircleGrid g(n);
  if (preset == "one" || preset.empty())
    return SampledFunction::constant(g, 1.0);
  if (preset == "exp-cos")
    return SampledFunction::from_fn(g, [](double t) { return std::exp(std::cos(t)); });
  if (preset == "abs-one-plus-z")
    return SampledFunction::from_fn(
        g, [](double t) { return std::abs(1.0 + std::polar(1.0, t)); });
  if (preset == "two-plus-cos")
    return SampledFunction::from_fn(g, [](double t) { return 2.0 + std::cos(t); });
  throw InvalidInput("unknown preset '" + preset + "'");
}

AnalyticElement load_analytic(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw InvalidInput("cannot open " + file);
  json j;
  in >> j;
  return analytic_from_json(j);
}

ATuple load_atuple(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw InvalidInput("cannot open " + file);
  json j;
  in >> j;
  return atuple_from_json(j);
}

cplx parse_complex(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) return {std::stod(s), 0.0};
  return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

int finish(const Report& rep, const std::string& out_dir, bool csv) {
  if (out_dir.empty()) {
    std::cout << rep.dump();
  } else {
    std::filesystem::create_directories(out_dir);
    std::filesystem::path p =
        std::filesystem::path(out_dir) / (rep.command + ".json");
    std::ofstream(p) << rep.dump();
    std::cout << p.string() << "\n";
    if (csv)
      for (const std::string& f : emit_plot_data(rep, out_dir))
        std::cout << f << "\n";
  }
  return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certificates and decision procedures for weighted modules over "
               "the disk algebra"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string out_dir;
  bool want_json = false, want_csv = false;
  app.add_option("--n", cfg.grid_n, "grid size (power of two)");
  app.add_option("--oversample", cfg.oversample, "verification oversampling");
  app.add_option("--seed", cfg.seed, "seed for randomized searches");
  app.add_option("--out", out_dir, "output directory (default: stdout)");
  app.add_flag("--json", want_json, "emit JSON report (default)");
  app.add_flag("--csv", want_csv, "also emit plot-data CSVs (needs --out)");

  std::string f_file, f_preset = "one";
  std::string f2_file, f2_preset = "one";
  std::string tag_name = "Q";
  std::vector<double> eps_schedule;
  std::vector<double> peak_angles;
  std::string w1_s = "0", w2_s = "0";
  std::string g_file, h_file, k_file;
  std::vector<int> n_schedule = {4, 8, 16};
  double claimed_c = 1.0;
  std::string mobius_a = "0", mobius_lambda = "1";

  CLI::App* c_outer = app.add_subcommand("outer", "outer function with |phi| = f");
  c_outer->add_option("--f", f_file, "input SampledFunction JSON file");
  c_outer->add_option("--preset", f_preset, "builtin weight");

  CLI::App* c_cert = app.add_subcommand("certify", "generate and verify a certificate");
  c_cert->add_option("--tag", tag_name, "Q, M_TIGHT or R_E");
  c_cert->add_option("--f", f_file, "input SampledFunction JSON file");
  c_cert->add_option("--preset", f_preset, "builtin weight");
  c_cert->add_option("--eps", eps_schedule, "eps schedule");
  c_cert->add_option("--peak", peak_angles, "peak set point angles");

  CLI::App* c_iso = app.add_subcommand("isometry", "module isometry decision");
  c_iso->add_option("--f1", f_file, "first weight JSON file");
  c_iso->add_option("--preset1", f_preset, "first builtin weight");
  c_iso->add_option("--f2", f2_file, "second weight JSON file");
  c_iso->add_option("--preset2", f2_preset, "second builtin weight");

  CLI::App* c_gle = app.add_subcommand("gleason", "part distance and dichotomy");
  c_gle->add_option("--w1", w1_s, "first point re[,im]");
  c_gle->add_option("--w2", w2_s, "second point re[,im]");
  c_gle->add_option("--G", g_file, "AnalyticElement JSON with G(w1) = -G(w2)");
  c_gle->add_option("--schedule", n_schedule, "qbar certificate n schedule");

  CLI::App* c_mor = app.add_subcommand("morita-two-point",
                                       "obstruction check for a tightness candidate");
  c_mor->add_option("--H", h_file, "ATuple JSON file")->required();
  c_mor->add_option("--K", k_file, "ATuple JSON file")->required();
  c_mor->add_option("--c", claimed_c, "claimed tightness constant");
  c_mor->add_option("--w1", w1_s, "first point re[,im]");
  c_mor->add_option("--w2", w2_s, "second point re[,im]");
  c_mor->add_option("--G", g_file, "AnalyticElement JSON file")->required();

  CLI::App* c_pic = app.add_subcommand("picard", "Picard decomposition");
  c_pic->add_option("--f", f_file, "weight JSON file");
  c_pic->add_option("--preset", f_preset, "builtin weight");
  c_pic->add_option("--mobius-a", mobius_a, "Mobius parameter a, re[,im]");
  c_pic->add_option("--mobius-lambda", mobius_lambda, "unimodular factor re[,im]");

  CLI::App* c_cor = app.add_subcommand("corpus", "rerun the shipped instances");

  CLI11_PARSE(app, argc, argv);
  (void)want_json;

  try {
    if (c_outer->parsed())
      return finish(cmd_outer(load_function(f_file, f_preset, cfg.grid_n), cfg),
                    out_dir, want_csv);
    if (c_cert->parsed()) {
      ClassTag tag = tag_from_string(tag_name);
      PeakSetSpec peak = peak_angles.empty() ? PeakSetSpec::empty_set()
                                             : PeakSetSpec::points(peak_angles);
      return finish(cmd_certify(tag, load_function(f_file, f_preset, cfg.grid_n),
                                eps_schedule, peak, cfg),
                    out_dir, want_csv);
    }
    if (c_iso->parsed())
      return finish(cmd_isometry(load_function(f_file, f_preset, cfg.grid_n),
                                 load_function(f2_file, f2_preset, cfg.grid_n), cfg),
                    out_dir, want_csv);
    if (c_gle->parsed()) {
      DiskPoint w1(parse_complex(w1_s)), w2(parse_complex(w2_s));
      if (g_file.empty())
        return finish(cmd_gleason(w1, w2, nullptr, n_schedule, cfg), out_dir,
                      want_csv);
      AnalyticElement G = load_analytic(g_file);
      return finish(cmd_gleason(w1, w2, &G, n_schedule, cfg), out_dir, want_csv);
    }
    if (c_mor->parsed()) {
      DiskPoint w1(parse_complex(w1_s)), w2(parse_complex(w2_s));
      return finish(cmd_morita_two_point(load_atuple(h_file), load_atuple(k_file),
                                         claimed_c, w1, w2, load_analytic(g_file),
                                         cfg),
                    out_dir, want_csv);
    }
    if (c_pic->parsed()) {
      MobiusMap phi{DiskPoint(parse_complex(mobius_a)),
                    parse_complex(mobius_lambda)};
      return finish(cmd_picard(load_function(f_file, f_preset, cfg.grid_n), phi, cfg),
                    out_dir, want_csv);
    }
    if (c_cor->parsed()) {
      std::string dir = out_dir.empty() ? "corpus_out" : out_dir;
      CorpusResult res = run_corpus(dir, cfg);
      for (std::size_t i = 0; i < res.names.size(); ++i)
        std::cout << (res.passed[i] ? "PASS " : "FAIL ") << res.names[i] << "  ("
                  << res.files[i] << ")\n";
      return res.all_passed() ? kExitPass : kExitFail;
    }
  } catch (const InvalidInput& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
