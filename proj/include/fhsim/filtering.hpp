// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

#include "fhsim/common.hpp"
#include "fhsim/fft.hpp"

namespace fhsim {

/// Applies an arbitrary frequency response H(f) to a long stream by
/// overlap-save: FFT blocks of `block` samples, keep only the middle
/// `block - 2*discard` samples of each block. `discard` must cover the
/// effective impulse-response extent on each side (the response is applied
/// zero-phase). Samples outside the stream are taken as `pad`.
template <typename ScalarIn>
Vec<ScalarIn> spectral_filter(const Vec<ScalarIn>& x, double fs,
                              const std::function<cd(double)>& response,
                              Eigen::Index block = Eigen::Index(1) << 18,
                              Eigen::Index discard = -1, ScalarIn pad = ScalarIn{}) {
  static_assert(std::is_same_v<ScalarIn, cd>, "complex blocks only");
  const Eigen::Index n = x.size();
  if (n == 0) return x;
  if (discard < 0) discard = block / 4;
  if (block <= 2 * discard) throw DimensionError("spectral_filter: block too small for discard");
  const Eigen::Index hop = block - 2 * discard;

  VecC h(block);
  for (Eigen::Index k = 0; k < block; ++k) h[k] = response(fft_bin_freq(k, block, fs));

  FftEngine fft;
  VecC out(n);
  VecC buf(block);
  for (Eigen::Index start = 0; start < n; start += hop) {
    const Eigen::Index in0 = start - discard;
    for (Eigen::Index i = 0; i < block; ++i) {
      const Eigen::Index idx = in0 + i;
      buf[i] = (idx >= 0 && idx < n) ? x[idx] : pad;
    }
    VecC spec = fft.fwd(buf);
    spec *= h;
    VecC y = fft.inv(spec);
    const Eigen::Index count = std::min<Eigen::Index>(hop, n - start);
    out.segment(start, count) = y.segment(discard, count);
  }
  return out;
}

/// In-place multiplication by e^{j 2 pi f t}, t anchored at sample 0.
inline void freq_shift(VecC& x, double freq_hz, double rate_hz, double phase0 = 0.0) {
  const double dphi = 2.0 * kPi * freq_hz / rate_hz;
  double phi = phase0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    x[i] *= cd(std::cos(phi), std::sin(phi));
    phi += dphi;
    if (phi > kPi) phi -= 2.0 * kPi;
    if (phi < -kPi) phi += 2.0 * kPi;
  }
}

}  // namespace fhsim
