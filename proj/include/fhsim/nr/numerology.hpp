// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "fhsim/common.hpp"

namespace fhsim::nr {

/// OFDM numerology for one component carrier plus the carrier-aggregation
/// layout. Defaults give the 100 MHz / 30 kHz SCS carrier and a 4-carrier
/// 400 MHz aggregate at 491.52 MS/s.
struct CarrierNumerology {
  int fft_size = 4096;
  double scs_hz = 30e3;
  int n_prb = 273;
  int n_symbols = 14;  // symbols generated per run; 14 = one full slot
  int n_carriers = 4;
  double carrier_spacing_hz = 122.88e6;

  int n_subcarriers() const { return 12 * n_prb; }
  double base_rate_hz() const { return fft_size * scs_hz; }
  double composite_rate_hz() const { return n_carriers * base_rate_hz(); }
  double occupied_bw_hz() const { return n_subcarriers() * scs_hz; }
  double total_occupied_bw_hz() const {
    return (n_carriers - 1) * carrier_spacing_hz + occupied_bw_hz();
  }

  /// Normal-CP sample counts at the base rate: the first symbol of each
  /// 0.5 ms half-subframe gets 352 samples (at 122.88 MS/s for fft 4096),
  /// others 288, so 14 symbols fill exactly 61440 samples. Smaller FFT sizes
  /// scale the CP proportionally and keep the slot arithmetic exact.
  int cp_length(int symbol) const {
    const long long base = ((symbol % 14) == 0) ? 352 : 288;
    return static_cast<int>(base * fft_size / 4096);
  }

  int symbol_length(int symbol) const { return fft_size + cp_length(symbol); }

  Eigen::Index symbol_start(int symbol) const {
    Eigen::Index s = 0;
    for (int i = 0; i < symbol; ++i) s += symbol_length(i);
    return s;
  }

  Eigen::Index samples_per_run() const { return symbol_start(n_symbols); }

  void validate() const {
    if (12 * n_prb > fft_size) throw ConfigError("numerology: 12*n_prb exceeds fft_size");
    if (n_prb < 1 || fft_size < 128) throw ConfigError("numerology: degenerate sizes");
    if (fft_size % 128 != 0)
      throw ConfigError("numerology: fft_size must be a multiple of 128 for exact CP scaling");
    if (n_symbols < 3 || n_symbols > 14)
      throw ConfigError("numerology: n_symbols must be in [3, 14]");
    if (n_carriers < 1) throw ConfigError("numerology: n_carriers must be >= 1");
    if (n_carriers > 1 && carrier_spacing_hz < occupied_bw_hz())
      throw ConfigError("numerology: carriers overlap");
  }
};

}  // namespace fhsim::nr
