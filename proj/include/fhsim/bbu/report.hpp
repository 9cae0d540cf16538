// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "fhsim/common.hpp"

namespace fhsim::bbu {

struct UeReport {
  int ue_id = 0;
  VecR prb_sinr_db;          // per PRB, pooled over carriers
  double post_sinr_db = 0.0;  // mean linear post-equalizer SINR, in dB
  double eff_sinr_db = 0.0;
  double se_bits = 0.0;
  double rate_bps = 0.0;
  double evm_rms = 0.0;      // equalized payload vs transmitted constellation
};

/// One scenario point: per-UE link quality and rates plus the cell aggregate
/// and the scenario echo identifying the point.
struct CellReport {
  std::vector<UeReport> ues;
  double cell_rate_bps = 0.0;  // sum of per-UE rates
  double pre_mimo_sinr_db = 0.0;
  double snr_db = 0.0;
  int n_ues = 0;
  double length_km = 0.0;
  bool ideal_fh = false;
  std::uint64_t seed = 0;
};

inline double cell_throughput(const std::vector<UeReport>& ues) {
  double acc = 0.0;
  for (const auto& u : ues) acc += u.rate_bps;
  return acc;
}

}  // namespace fhsim::bbu
