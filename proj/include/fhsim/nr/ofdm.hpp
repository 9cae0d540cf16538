// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "fhsim/common.hpp"
#include "fhsim/fft.hpp"
#include "fhsim/nr/numerology.hpp"
#include "fhsim/nr/resource_grid.hpp"

namespace fhsim::nr {

/// FFT bin for grid row k with the occupied band centered on DC.
inline Eigen::Index subcarrier_bin(int k, const CarrierNumerology& num) {
  const int signed_bin = k - num.n_subcarriers() / 2;
  return (signed_bin + num.fft_size) % num.fft_size;
}

/// CP-OFDM modulation of one layer grid (n_subcarriers x n_symbols) to a
/// base-rate stream. Unitary DFT scaling: time-domain symbol body is
/// IDFT(X) * sqrt(fft_size) relative to Eigen's 1/N inverse, so grid energy
/// equals body energy exactly.
inline IqStream ofdm_modulate_layer(const MatC& grid, const CarrierNumerology& num) {
  if (grid.rows() != num.n_subcarriers() || grid.cols() != num.n_symbols)
    throw DimensionError("ofdm_modulate: grid dimensions do not match numerology");

  FftEngine fft;
  const double unitary = std::sqrt(static_cast<double>(num.fft_size));
  IqStream out;
  out.rate_hz = num.base_rate_hz();
  out.samples = VecC::Zero(num.samples_per_run());
  for (int t = 0; t < num.n_symbols; ++t) {
    VecC bins = VecC::Zero(num.fft_size);
    for (int k = 0; k < num.n_subcarriers(); ++k) bins[subcarrier_bin(k, num)] = grid(k, t);
    const VecC body = fft.inv(bins) * unitary;
    const int cp = num.cp_length(t);
    const Eigen::Index start = num.symbol_start(t);
    out.samples.segment(start, cp) = body.tail(cp);
    out.samples.segment(start + cp, num.fft_size) = body;
  }
  return out;
}

/// Modulates every layer of a grid; one stream per layer.
inline std::vector<IqStream> ofdm_modulate(const ResourceGrid& grid,
                                           const CarrierNumerology& num) {
  std::vector<IqStream> streams;
  streams.reserve(grid.layers.size());
  for (const MatC& g : grid.layers) streams.push_back(ofdm_modulate_layer(g, num));
  return streams;
}

/// CP-stripped per-symbol DFT. `timing_offset` is the sample index in the
/// stream where the slot is assumed to start; an offset that is early by d
/// samples (still inside the CP) yields the clean grid times a per-subcarrier
/// phase ramp exp(-j 2 pi bin d / fft_size), which remove_timing_ramp undoes.
inline MatC ofdm_demodulate(const IqStream& stream, Eigen::Index timing_offset,
                            const CarrierNumerology& num) {
  if (timing_offset < 0 || timing_offset + num.samples_per_run() > stream.size())
    throw DimensionError("ofdm_demodulate: insufficient samples for requested slot");

  FftEngine fft;
  const double unitary = 1.0 / std::sqrt(static_cast<double>(num.fft_size));
  MatC grid(num.n_subcarriers(), num.n_symbols);
  for (int t = 0; t < num.n_symbols; ++t) {
    const Eigen::Index start = timing_offset + num.symbol_start(t) + num.cp_length(t);
    const VecC bins = fft.fwd(stream.samples.segment(start, num.fft_size)) * unitary;
    for (int k = 0; k < num.n_subcarriers(); ++k) grid(k, t) = bins[subcarrier_bin(k, num)];
  }
  return grid;
}

/// Undoes the linear phase ramp left by demodulating `early_samples` before
/// the true slot start (positive = window early).
inline void remove_timing_ramp(MatC& grid, const CarrierNumerology& num,
                               double early_samples) {
  for (int k = 0; k < static_cast<int>(grid.rows()); ++k) {
    const int signed_bin = k - num.n_subcarriers() / 2;
    const cd rot = std::polar(1.0, 2.0 * kPi * signed_bin * early_samples / num.fft_size);
    grid.row(k) *= rot;
  }
}

}  // namespace fhsim::nr
