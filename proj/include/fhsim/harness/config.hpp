// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fhsim/channel/scenario.hpp"
#include "fhsim/common.hpp"
#include "fhsim/fronthaul/aggregator.hpp"
#include "fhsim/nr/numerology.hpp"
#include "fhsim/optical/fiber_link.hpp"
#include "fhsim/optical/kk_receiver.hpp"

namespace fhsim::harness {

struct SweepAxes {
  std::vector<double> snr_db{0.0};
  std::vector<int> n_ues{1};
  std::vector<double> length_km{0.0};
  int n_drops = 1;
};

/// One named scenario: module sub-configs plus the sweep grid. Per-point
/// fields (UE count, target SNR, fiber length) are filled in from the sweep
/// axes at run time; everything else is fixed for the whole sweep.
struct RunConfig {
  std::string name = "unnamed";
  nr::CarrierNumerology numerology;
  channel::ScenarioConfig scenario;
  optical::FiberLinkConfig fiber;
  optical::KkConfig kk;
  int fh_oversample = 1;  // integer per-channel rate multiplier before TDMA
  bool ideal_fh = false;  // skip the optical stage, keep everything else
  SweepAxes sweep;
  std::uint64_t seed = 1;
  int n_workers = 1;
  std::string out_dir = "out";
  std::string raw_json;  // exact text the config was parsed from

  double per_channel_rate_hz() const {
    return numerology.composite_rate_hz() * fh_oversample;
  }
  fronthaul::AggregationPlan plan() const {
    return {scenario.n_rx_antennas, per_channel_rate_hz()};
  }

  void validate() const {
    numerology.validate();
    fiber.validate();
    kk.validate();
    {
      channel::ScenarioConfig sc = scenario;
      sc.n_ues = 1;
      sc.sample_rate_hz = numerology.composite_rate_hz();
      sc.validate();
    }
    if (fh_oversample < 1) throw ConfigError("config: fh_oversample must be >= 1");
    if (sweep.n_drops < 1) throw ConfigError("config: n_drops must be >= 1");
    if (n_workers < 1) throw ConfigError("config: workers must be >= 1");
    if (sweep.snr_db.empty() || sweep.n_ues.empty() || sweep.length_km.empty())
      throw ConfigError("config: sweep axes must be non-empty");
    for (int u : sweep.n_ues)
      if (u < 1 || u * scenario.layers_per_ue > 12)
        throw ConfigError("config: n_ues * layers_per_ue must be in [1, 12]");
    for (double l : sweep.length_km)
      if (l < 0.0) throw ConfigError("config: negative fiber length");
  }
};

namespace detail {

inline void expect_keys(const nlohmann::json& j, const std::string& ctx,
                        std::initializer_list<const char*> allowed) {
  if (!j.is_object())
    throw ConfigError("config: '" + ctx + "' must be a JSON object");
  for (const auto& el : j.items()) {
    bool known = false;
    for (const char* a : allowed)
      if (el.key() == a) {
        known = true;
        break;
      }
    if (!known)
      throw ConfigError("config: unknown key '" +
                        (ctx.empty() ? el.key() : ctx + "." + el.key()) + "'");
  }
}

template <typename T>
void maybe(const nlohmann::json& j, const char* key, T& out) {
  if (j.contains(key)) j.at(key).get_to(out);
}

}  // namespace detail

/// Parses and validates a config. Unknown keys anywhere are an error, so a
/// typo silently reverting a field to its default cannot slip through.
inline RunConfig parse_run_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }

  RunConfig cfg;
  cfg.raw_json = text;
  try {
    detail::expect_keys(j, "", {"name", "numerology", "scenario", "fronthaul", "optical",
                                "kk", "sweep", "seed", "workers", "out_dir", "ideal_fh"});
    detail::maybe(j, "name", cfg.name);
    detail::maybe(j, "seed", cfg.seed);
    detail::maybe(j, "workers", cfg.n_workers);
    detail::maybe(j, "out_dir", cfg.out_dir);
    detail::maybe(j, "ideal_fh", cfg.ideal_fh);

    if (j.contains("numerology")) {
      const auto& n = j.at("numerology");
      detail::expect_keys(n, "numerology",
                          {"fft_size", "scs_hz", "n_prb", "n_symbols", "n_carriers",
                           "carrier_spacing_hz"});
      detail::maybe(n, "fft_size", cfg.numerology.fft_size);
      detail::maybe(n, "scs_hz", cfg.numerology.scs_hz);
      detail::maybe(n, "n_prb", cfg.numerology.n_prb);
      detail::maybe(n, "n_symbols", cfg.numerology.n_symbols);
      detail::maybe(n, "n_carriers", cfg.numerology.n_carriers);
      detail::maybe(n, "carrier_spacing_hz", cfg.numerology.carrier_spacing_hz);
    }
    if (j.contains("scenario")) {
      const auto& s = j.at("scenario");
      detail::expect_keys(s, "scenario",
                          {"n_rx_antennas", "array_rows", "array_cols", "layers_per_ue",
                           "carrier_freq_hz", "inter_site_distance_m", "n_clusters",
                           "delay_spread_s", "bs_height_m", "ue_height_m", "min_distance_m",
                           "cluster_azimuth_spread_deg", "cluster_elevation_spread_deg",
                           "cluster_shadow_sigma_db", "frac_delay_taps", "identity",
                           "noise_enabled"});
      detail::maybe(s, "n_rx_antennas", cfg.scenario.n_rx_antennas);
      detail::maybe(s, "array_rows", cfg.scenario.array_rows);
      detail::maybe(s, "array_cols", cfg.scenario.array_cols);
      detail::maybe(s, "layers_per_ue", cfg.scenario.layers_per_ue);
      detail::maybe(s, "carrier_freq_hz", cfg.scenario.carrier_freq_hz);
      detail::maybe(s, "inter_site_distance_m", cfg.scenario.inter_site_distance_m);
      detail::maybe(s, "n_clusters", cfg.scenario.n_clusters);
      detail::maybe(s, "delay_spread_s", cfg.scenario.delay_spread_s);
      detail::maybe(s, "bs_height_m", cfg.scenario.bs_height_m);
      detail::maybe(s, "ue_height_m", cfg.scenario.ue_height_m);
      detail::maybe(s, "min_distance_m", cfg.scenario.min_distance_m);
      detail::maybe(s, "cluster_azimuth_spread_deg", cfg.scenario.cluster_azimuth_spread_deg);
      detail::maybe(s, "cluster_elevation_spread_deg",
                    cfg.scenario.cluster_elevation_spread_deg);
      detail::maybe(s, "cluster_shadow_sigma_db", cfg.scenario.cluster_shadow_sigma_db);
      detail::maybe(s, "frac_delay_taps", cfg.scenario.frac_delay_taps);
      detail::maybe(s, "identity", cfg.scenario.identity);
      detail::maybe(s, "noise_enabled", cfg.scenario.noise_enabled);
    }
    if (j.contains("fronthaul")) {
      const auto& f = j.at("fronthaul");
      detail::expect_keys(f, "fronthaul", {"oversample"});
      detail::maybe(f, "oversample", cfg.fh_oversample);
    }
    if (j.contains("optical")) {
      const auto& o = j.at("optical");
      detail::expect_keys(o, "optical",
                          {"length_km", "dispersion_ps_nm_km", "wavelength_nm", "if_hz",
                           "cspr_db", "dac_rate_hz", "adc_rate_hz", "adc_bits",
                           "rx_noise_power"});
      detail::maybe(o, "length_km", cfg.fiber.length_km);
      detail::maybe(o, "dispersion_ps_nm_km", cfg.fiber.dispersion_ps_nm_km);
      detail::maybe(o, "wavelength_nm", cfg.fiber.wavelength_nm);
      detail::maybe(o, "if_hz", cfg.fiber.if_hz);
      detail::maybe(o, "cspr_db", cfg.fiber.cspr_db);
      detail::maybe(o, "dac_rate_hz", cfg.fiber.dac_rate_hz);
      detail::maybe(o, "adc_rate_hz", cfg.fiber.adc_rate_hz);
      detail::maybe(o, "adc_bits", cfg.fiber.adc_bits);
      detail::maybe(o, "rx_noise_power", cfg.fiber.rx_noise_power);
    }
    if (j.contains("kk")) {
      const auto& k = j.at("kk");
      detail::expect_keys(k, "kk", {"oversample", "epsilon_floor", "hilbert_block"});
      detail::maybe(k, "oversample", cfg.kk.oversample);
      detail::maybe(k, "epsilon_floor", cfg.kk.epsilon_floor);
      detail::maybe(k, "hilbert_block", cfg.kk.hilbert_block);
    }
    if (j.contains("sweep")) {
      const auto& s = j.at("sweep");
      detail::expect_keys(s, "sweep", {"snr_db", "n_ues", "length_km", "n_drops"});
      detail::maybe(s, "snr_db", cfg.sweep.snr_db);
      detail::maybe(s, "n_ues", cfg.sweep.n_ues);
      detail::maybe(s, "length_km", cfg.sweep.length_km);
      detail::maybe(s, "n_drops", cfg.sweep.n_drops);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }

  cfg.scenario.sample_rate_hz = cfg.numerology.composite_rate_hz();
  cfg.validate();
  return cfg;
}

inline RunConfig load_run_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("config: cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_run_config(ss.str());
}

inline std::string profile_path(const std::string& name) {
  return std::string(FHSIM_PROFILE_DIR) + "/" + name + ".json";
}

inline RunConfig load_profile(const std::string& name) {
  return load_run_config(profile_path(name));
}

}  // namespace fhsim::harness
