// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "fhsim/common.hpp"
#include "fhsim/rng.hpp"

namespace fhsim::nr {

/// Per-port DMRS signature: CDM group plus +/-1 cover codes over the
/// 2-subcarrier x 2-symbol CDM resource.
struct DmrsPort {
  int cdm_group;              // 0..2, selects the subcarrier comb
  std::array<int, 2> wf;      // frequency cover code over the pair
  std::array<int, 2> wt;      // time cover code over the two symbols
};

/// Configuration type 2, double-symbol front-loaded DMRS: 3 CDM groups of
/// adjacent subcarrier pairs per 6 subcarriers, 12 orthogonal ports.
struct DmrsConfig {
  static constexpr int kConfigType = 2;
  static constexpr int kNumSymbols = 2;
  static constexpr int kMaxPorts = 12;

  static DmrsPort port(int p) {
    if (p < 0 || p >= kMaxPorts) throw LayerCapacityError("dmrs: port index out of range");
    static constexpr std::array<int, 12> group = {0, 0, 1, 1, 2, 2, 0, 0, 1, 1, 2, 2};
    return DmrsPort{group[p],
                    {1, (p % 2 == 0) ? 1 : -1},
                    {1, (p < 6) ? 1 : -1}};
  }

  /// Subcarrier indices used by a CDM group within one 6-subcarrier span.
  static std::array<int, 2> comb_offsets(int cdm_group) {
    return {2 * cdm_group, 2 * cdm_group + 1};
  }

  /// Signature of port p over one CDM resource spanning all 3 groups:
  /// 12 entries laid out as (group, subcarrier-in-pair, symbol).
  static Eigen::Matrix<double, 12, 1> signature(int p) {
    const DmrsPort port_p = port(p);
    Eigen::Matrix<double, 12, 1> s = Eigen::Matrix<double, 12, 1>::Zero();
    for (int kp = 0; kp < 2; ++kp)
      for (int tp = 0; tp < 2; ++tp)
        s[4 * port_p.cdm_group + 2 * kp + tp] = port_p.wf[kp] * port_p.wt[tp];
    return s;
  }
};

/// Shared base pilot sequence (unit-modulus QPSK), one value per
/// (subcarrier, DMRS symbol). All ports modulate the same base sequence with
/// their cover codes, which is what makes pilot-reverse modulation work.
inline MatC dmrs_base_sequence(int n_subcarriers, std::uint64_t seed) {
  Rng rng(seed);
  MatC base(n_subcarriers, DmrsConfig::kNumSymbols);
  const double a = 1.0 / std::sqrt(2.0);
  for (int t = 0; t < DmrsConfig::kNumSymbols; ++t)
    for (int k = 0; k < n_subcarriers; ++k) {
      const std::uint64_t b = rng.bits();
      base(k, t) = cd((b & 1) ? a : -a, (b & 2) ? a : -a);
    }
  return base;
}

}  // namespace fhsim::nr
