// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fhsim/common.hpp"
#include "fhsim/rng.hpp"

namespace fhsim::nr {

enum class Modulation { QPSK, QAM16, QAM64, QAM256 };

inline int bits_per_symbol(Modulation m) {
  switch (m) {
    case Modulation::QPSK: return 2;
    case Modulation::QAM16: return 4;
    case Modulation::QAM64: return 6;
    case Modulation::QAM256: return 8;
  }
  return 0;
}

/// Gray-mapped square constellation with unit average power.
inline VecC constellation(Modulation m) {
  const int bps = bits_per_symbol(m);
  const int levels = 1 << (bps / 2);  // per dimension
  // E{|x|^2} = 2 * sum of (2i - L + 1)^2 over a dimension / L
  double e_dim = 0.0;
  for (int i = 0; i < levels; ++i) {
    const double a = 2.0 * i - (levels - 1);
    e_dim += a * a;
  }
  e_dim /= levels;
  const double scale = 1.0 / std::sqrt(2.0 * e_dim);
  VecC pts(1 << bps);
  for (int s = 0; s < (1 << bps); ++s) {
    const int bi = s >> (bps / 2);
    const int bq = s & (levels - 1);
    const int gi = bi ^ (bi >> 1);  // Gray index -> level order
    const int gq = bq ^ (bq >> 1);
    pts[s] = cd((2.0 * gi - (levels - 1)) * scale, (2.0 * gq - (levels - 1)) * scale);
  }
  return pts;
}

inline VecC random_symbols(Modulation m, Eigen::Index n, Rng& rng) {
  const VecC pts = constellation(m);
  VecC out(n);
  for (Eigen::Index i = 0; i < n; ++i) out[i] = pts[rng.index(pts.size())];
  return out;
}

}  // namespace fhsim::nr
