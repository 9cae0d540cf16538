// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "fhsim/common.hpp"
#include "fhsim/nr/numerology.hpp"

namespace fhsim::bbu {

/// Peak spectral efficiency: 256QAM at the highest LDPC code rate 948/1024.
inline constexpr double kSeMaxBits = 8.0 * 948.0 / 1024.0;

/// Effective SINR -> bits per modulation symbol, capped at the peak MCS.
inline double se_bits(double eff_sinr_db) {
  if (std::isinf(eff_sinr_db) && eff_sinr_db < 0.0) return 0.0;
  if (!std::isfinite(eff_sinr_db)) throw ConfigError("se_bits: effective SINR must be finite");
  return std::min(std::log2(1.0 + db_to_lin(eff_sinr_db)), kSeMaxBits);
}

/// Data rate for one layer: SE times data resource elements per second.
/// At 30 kHz SCS a subcarrier carries 28000 symbols/s, of which 12/14 are
/// payload (two front-loaded DMRS symbols per slot), so each subcarrier
/// contributes 24000 data symbols/s per carrier.
inline double rate_bps(double se, const nr::CarrierNumerology& num) {
  return se * num.n_carriers * static_cast<double>(num.n_subcarriers()) * 24000.0;
}

}  // namespace fhsim::bbu
