// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>

#include "fhsim/bbu/miesm_table.hpp"
#include "fhsim/common.hpp"

namespace fhsim::bbu {

/// 256QAM constrained capacity I(snr_db), bits/symbol: piecewise-linear
/// interpolation of the committed table, clamped at the grid ends.
inline double mi_bits(double sinr_db) {
  using detail::kMiTableBits;
  using detail::kMiTableCount;
  using detail::kMiTableMinDb;
  using detail::kMiTableStepDb;
  const double u = (sinr_db - kMiTableMinDb) / kMiTableStepDb;
  if (!(u > 0.0)) return kMiTableBits[0];  // also catches -inf dB
  if (u >= kMiTableCount - 1) return kMiTableBits[kMiTableCount - 1];
  const auto i = static_cast<int>(u);
  const double w = u - i;
  return (1.0 - w) * kMiTableBits[i] + w * kMiTableBits[i + 1];
}

/// Inverse of mi_bits on the same piecewise-linear curve, so
/// mi_inverse_db(mi_bits(x)) == x exactly for x inside the strictly
/// increasing part of the table. Clamped to the grid ends; values in the
/// double-precision saturation plateau (~>32 dB) return its left edge.
inline double mi_inverse_db(double bits) {
  using detail::kMiTableBits;
  using detail::kMiTableCount;
  using detail::kMiTableMinDb;
  using detail::kMiTableStepDb;
  if (bits <= kMiTableBits[0]) return kMiTableMinDb;
  if (bits >= kMiTableBits[kMiTableCount - 1]) {
    int i = kMiTableCount - 1;
    while (i > 0 && kMiTableBits[i - 1] >= bits) --i;
    return kMiTableMinDb + kMiTableStepDb * i;
  }
  const double* lo = std::lower_bound(kMiTableBits, kMiTableBits + kMiTableCount, bits);
  const auto i = static_cast<int>(lo - kMiTableBits);  // first entry >= bits, i >= 1
  const double span = kMiTableBits[i] - kMiTableBits[i - 1];
  const double w = span > 0.0 ? (bits - kMiTableBits[i - 1]) / span : 1.0;
  return kMiTableMinDb + kMiTableStepDb * (i - 1 + w);
}

/// Mutual-information average: gamma_eff = I^-1( mean I(gamma) ), beta = 1.
inline double miesm_effective_db(const VecR& sinr_db) {
  if (sinr_db.size() == 0) throw DimensionError("miesm_effective: empty input");
  double acc = 0.0;
  for (Eigen::Index i = 0; i < sinr_db.size(); ++i) acc += mi_bits(sinr_db[i]);
  return mi_inverse_db(acc / static_cast<double>(sinr_db.size()));
}

/// Per-PRB SINR: the MI-consistent average over each run of 12 subcarriers,
/// same I-curve as the effective-SINR mapping.
inline VecR prb_sinr_db(const VecR& subcarrier_sinr_db) {
  const Eigen::Index n = subcarrier_sinr_db.size();
  if (n == 0 || n % 12 != 0)
    throw DimensionError("prb_sinr: subcarrier count not a multiple of 12");
  VecR out(n / 12);
  for (Eigen::Index p = 0; p < out.size(); ++p)
    out[p] = miesm_effective_db(subcarrier_sinr_db.segment(12 * p, 12));
  return out;
}

}  // namespace fhsim::bbu
