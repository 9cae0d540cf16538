// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fhsim/common.hpp"

namespace fhsim::channel {

/// Multi-user uplink deployment: K single-layer UEs dropped in a hexagonal
/// sector served by a planar array. The geometric clustered model below is a
/// deliberate simplification of the 3GPP UMi family: closed-loop power
/// control removes the pathloss dependence, so only the frequency/space
/// selectivity of the multipath matters here.
struct ScenarioConfig {
  int n_rx_antennas = 64;
  int array_rows = 8;
  int array_cols = 8;
  int n_ues = 1;
  int layers_per_ue = 1;
  double carrier_freq_hz = 3.5e9;
  double inter_site_distance_m = 200.0;
  double target_rx_snr_db = 0.0;
  int n_clusters = 12;
  double delay_spread_s = 100e-9;
  double bs_height_m = 10.0;
  double ue_height_m = 1.5;
  double min_distance_m = 10.0;
  double cluster_azimuth_spread_deg = 15.0;
  double cluster_elevation_spread_deg = 3.0;
  double cluster_shadow_sigma_db = 3.0;
  int frac_delay_taps = 32;
  bool identity = false;     // bypass fading: every antenna hears each layer at gain 1
  bool noise_enabled = true;
  double sample_rate_hz = 491.52e6;  // rate the taps are realized at

  int n_layers() const { return n_ues * layers_per_ue; }

  void validate() const {
    if (array_rows * array_cols != n_rx_antennas)
      throw ConfigError("scenario: array_rows*array_cols must equal n_rx_antennas");
    if (n_ues < 1 || layers_per_ue < 1) throw ConfigError("scenario: need at least one UE/layer");
    if (n_clusters < 1) throw ConfigError("scenario: need at least one cluster");
    if (delay_spread_s < 0.0) throw ConfigError("scenario: negative delay spread");
    if (sample_rate_hz <= 0.0) throw ConfigError("scenario: sample_rate_hz must be positive");
    if (frac_delay_taps < 8 || frac_delay_taps % 2)
      throw ConfigError("scenario: frac_delay_taps must be even and >= 8");
  }
};

}  // namespace fhsim::channel
