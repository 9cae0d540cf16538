// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fhsim/harness/emit.hpp"

namespace {

fhsim::harness::RunConfig load_config(const std::string& config_path,
                                      const std::string& profile) {
  if (!config_path.empty()) return fhsim::harness::load_run_config(config_path);
  return fhsim::harness::load_profile(profile);
}

void print_report(const fhsim::bbu::CellReport& r) {
  std::printf("point: snr %.1f dB, %d UE, %.1f km%s, seed %llu\n", r.snr_db, r.n_ues,
              r.length_km, r.ideal_fh ? " (ideal FH bypass)" : "",
              static_cast<unsigned long long>(r.seed));
  if (!r.ideal_fh)
    std::printf("  fronthaul pre-MIMO SINR: %.2f dB\n", r.pre_mimo_sinr_db);
  for (const auto& u : r.ues)
    std::printf(
        "  ue %d: post-MIMO %.2f dB, effective %.2f dB, SE %.4f b/s/Hz, "
        "rate %.4f Gb/s, EVM %.2f%%\n",
        u.ue_id, u.post_sinr_db, u.eff_sinr_db, u.se_bits, u.rate_bps / 1e9,
        100.0 * u.evm_rms);
  std::printf("  cell rate: %.4f Gb/s\n", r.cell_rate_bps / 1e9);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fhsim: joint wireless-optical 5G fronthaul link simulator"};
  app.require_subcommand(1);

  std::string config_path, profile = "desk", out_dir;
  std::uint64_t seed = 0;
  int workers = 0;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "explicit config file (overrides --profile)");
    cmd->add_option("--profile", profile, "named profile from the profiles directory")
        ->default_val("desk");
    cmd->add_option("--seed", seed, "master seed override");
    cmd->add_option("--out", out_dir, "output directory override");
  };

  CLI::App* run = app.add_subcommand("run", "simulate a single scenario point");
  add_common(run);
  double snr_db = 0.0, length_km = 0.0;
  int n_ues = 0, drop = 0;
  bool ideal = false;
  run->add_option("--snr", snr_db, "received SNR in dB (default: first sweep value)");
  run->add_option("--ues", n_ues, "number of UEs (default: first sweep value)");
  run->add_option("--length-km", length_km, "fiber length (default: first sweep value)");
  run->add_option("--drop", drop, "channel drop index")->default_val(0);
  run->add_flag("--ideal-fh", ideal, "bypass the optical fronthaul");

  CLI::App* sweep = app.add_subcommand("sweep", "run the config's full sweep grid");
  add_common(sweep);
  sweep->add_option("--workers", workers, "worker thread count override");

  CLI::App* profiles = app.add_subcommand("profiles", "list shipped profiles");
  CLI::App* validate = app.add_subcommand("validate-config", "parse and validate a config");
  add_common(validate);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*profiles) {
      namespace fs = std::filesystem;
      std::vector<std::string> names;
      for (const auto& e : fs::directory_iterator(FHSIM_PROFILE_DIR))
        if (e.path().extension() == ".json") names.push_back(e.path().stem().string());
      std::sort(names.begin(), names.end());
      for (const std::string& n : names) {
        try {
          const auto cfg = fhsim::harness::load_profile(n);
          std::printf(
              "%-18s %2d ch x %.2f MS/s (%d carriers, %d PRB), sweep %zu snr x %zu ues "
              "x %zu lengths x %d drops\n",
              n.c_str(), cfg.scenario.n_rx_antennas, cfg.per_channel_rate_hz() / 1e6,
              cfg.numerology.n_carriers, cfg.numerology.n_prb, cfg.sweep.snr_db.size(),
              cfg.sweep.n_ues.size(), cfg.sweep.length_km.size(), cfg.sweep.n_drops);
        } catch (const std::exception& e) {
          std::printf("%-18s invalid: %s\n", n.c_str(), e.what());
        }
      }
      return 0;
    }

    fhsim::harness::RunConfig cfg = load_config(config_path, profile);
    if (seed != 0) cfg.seed = seed;
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    if (workers > 0) cfg.n_workers = workers;

    if (*validate) {
      std::printf("ok: %s\n", cfg.name.c_str());
      return 0;
    }
    if (*run) {
      fhsim::harness::PointSpec p;
      p.snr_db = run->count("--snr") ? snr_db : cfg.sweep.snr_db.front();
      p.n_ues = run->count("--ues") ? n_ues : cfg.sweep.n_ues.front();
      p.length_km = run->count("--length-km") ? length_km : cfg.sweep.length_km.front();
      p.drop = drop;
      p.ideal_fh = ideal || cfg.ideal_fh;
      print_report(fhsim::harness::run_point(cfg, p));
      return 0;
    }
    if (*sweep) {
      const auto pts = fhsim::harness::run_sweep(cfg);
      const auto written = fhsim::harness::write_sweep_outputs(cfg, pts, cfg.out_dir);
      std::size_t failed = 0;
      for (const auto& p : pts)
        if (!p.ok) ++failed;
      std::printf("sweep '%s': %zu points, %zu failed\n", cfg.name.c_str(), pts.size(),
                  failed);
      for (const auto& w : written) std::printf("  wrote %s\n", w.c_str());
      return failed == 0 ? 0 : 2;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
