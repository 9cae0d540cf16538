// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "fhsim/common.hpp"
#include "fhsim/filtering.hpp"
#include "fhsim/nr/numerology.hpp"
#include "fhsim/resample.hpp"

namespace fhsim::nr {

/// Center offset of carrier i relative to the composite center,
/// {-1.5, -0.5, +0.5, +1.5} * carrier_spacing_hz for 4 carriers.
inline double carrier_offset_hz(int i, const CarrierNumerology& num) {
  return (i - 0.5 * (num.n_carriers - 1)) * num.carrier_spacing_hz;
}

/// Interpolation/decimation band plan shared by stack and split: keep the
/// occupied carrier, be quiet by the midpoint between carriers. With both
/// the stacking and the splitting filter silent past the midpoint, every
/// frequency is covered by at least one full stopband and no weakly
/// suppressed window opens up between carriers.
inline ResampleSpec carrier_band_plan(const CarrierNumerology& num) {
  const double pass = 0.5 * num.occupied_bw_hz();
  const double stop = num.n_carriers > 1 ? 0.5 * num.carrier_spacing_hz
                                         : num.base_rate_hz() - pass;
  return ResampleSpec{pass, stop};
}

/// Frequency-aggregates base-rate carrier streams into one composite stream:
/// each carrier is interpolated to the composite rate, shifted to its offset
/// and summed. All stages are zero-phase, so composite sample k still sits at
/// t = k / composite_rate with the slot starting at t = 0.
inline IqStream stack_carriers(const std::vector<IqStream>& streams,
                               const CarrierNumerology& num) {
  if (static_cast<int>(streams.size()) != num.n_carriers)
    throw DimensionError("stack_carriers: stream count does not match n_carriers");
  for (const IqStream& s : streams)
    if (s.size() != streams[0].size())
      throw DimensionError("stack_carriers: input streams must have equal length");

  const SincResampler up(num.base_rate_hz(), num.composite_rate_hz(), carrier_band_plan(num));
  IqStream out;
  out.rate_hz = num.composite_rate_hz();
  out.samples = VecC::Zero(up.output_size(streams[0].size()));
  for (int i = 0; i < num.n_carriers; ++i) {
    VecC carrier = up.apply(streams[i].samples);
    freq_shift(carrier, carrier_offset_hz(i, num), num.composite_rate_hz());
    out.samples += carrier;
  }
  return out;
}

/// Inverse of stack_carriers: shift each carrier to baseband and decimate
/// back to the base rate. Isolation between carriers follows the band plan's
/// stopband attenuation.
inline std::vector<IqStream> split_carriers(const IqStream& composite,
                                            const CarrierNumerology& num) {
  const SincResampler down(num.composite_rate_hz(), num.base_rate_hz(),
                           carrier_band_plan(num));
  std::vector<IqStream> streams(num.n_carriers);
  for (int i = 0; i < num.n_carriers; ++i) {
    VecC shifted = composite.samples;
    freq_shift(shifted, -carrier_offset_hz(i, num), num.composite_rate_hz());
    streams[i].samples = down.apply(shifted);
    streams[i].rate_hz = num.base_rate_hz();
  }
  return streams;
}

}  // namespace fhsim::nr
