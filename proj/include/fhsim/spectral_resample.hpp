// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numeric>

#include "fhsim/common.hpp"
#include "fhsim/fft.hpp"

namespace fhsim {

/// Number of samples at `rate` making up one common period of all the given
/// rates (all integer Hz). Records whose length is a multiple of this
/// quantum can be retimed exactly between any of the rates with bin-aligned
/// frequency shifts at multiples of the gcd.
inline Eigen::Index rate_block_quantum(double rate, std::initializer_list<double> rates) {
  std::uint64_t g = static_cast<std::uint64_t>(std::llround(rate));
  if (std::abs(rate - static_cast<double>(g)) > 1e-6)
    throw ConfigError("rate_block_quantum: rates must be integer Hz");
  for (double r : rates) {
    const std::uint64_t v = static_cast<std::uint64_t>(std::llround(std::abs(r)));
    if (std::abs(std::abs(r) - static_cast<double>(v)) > 1e-6)
      throw ConfigError("rate_block_quantum: rates must be integer Hz");
    if (v) g = std::gcd(g, v);
  }
  return static_cast<Eigen::Index>(std::llround(rate) / static_cast<long long>(g));
}

/// Smallest {2,3,5}-smooth integer >= n (keeps the mixed-radix FFTs fast).
inline Eigen::Index next_smooth(Eigen::Index n) {
  for (Eigen::Index c = std::max<Eigen::Index>(n, 1);; ++c) {
    Eigen::Index r = c;
    for (Eigen::Index f : {2, 3, 5})
      while (r % f == 0) r /= f;
    if (r == 1) return c;
  }
}

/// Exact one-shot retune: interprets x as one period of a bandlimited
/// signal at rate_in, shifts it by shift_hz and resamples to rate_out with
/// a brick-wall band limit, all as a single spectral bin remap. Requires
/// the record length to sit on the common rate grid: n*rate_out/rate_in and
/// n*shift_hz/rate_in must be integers (see rate_block_quantum). The
/// operation is circular in time; callers keep transients away from the
/// record boundary.
inline VecC spectral_retune(const VecC& x, double rate_in, double rate_out,
                            double shift_hz) {
  const Eigen::Index n = x.size();
  if (n == 0) throw DegenerateInputError("spectral_retune: empty input");
  const double m_real = static_cast<double>(n) * (rate_out / rate_in);
  const double s_real = static_cast<double>(n) * (shift_hz / rate_in);
  const Eigen::Index m = static_cast<Eigen::Index>(std::llround(m_real));
  const Eigen::Index sb = static_cast<Eigen::Index>(std::llround(s_real));
  if (std::abs(m_real - static_cast<double>(m)) > 1e-6 ||
      std::abs(s_real - static_cast<double>(sb)) > 1e-6)
    throw ConfigError("spectral_retune: record length is off the common rate grid");

  FftEngine fft;
  VecC X = fft.fwd(x);
  VecC Y = VecC::Zero(m);
  const double scale = static_cast<double>(m) / static_cast<double>(n);
  // Nyquist counts as negative so that an up/down round trip is exact.
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index s_in = (2 * k < n) ? k : k - n;
    const Eigen::Index t = s_in + sb;
    if (t < -(m / 2) || 2 * t >= m) continue;
    const Eigen::Index idx = t >= 0 ? t : t + m;
    Y[idx] = X[k] * scale;
  }
  return fft.inv(Y);
}

/// Convenience overload on streams. Content moves by +shift_hz, so the
/// recorded band center moves with it.
inline IqStream spectral_retune(const IqStream& x, double rate_out, double shift_hz) {
  IqStream out;
  out.samples = spectral_retune(x.samples, x.rate_hz, rate_out, shift_hz);
  out.rate_hz = rate_out;
  out.center_freq_hz = x.center_freq_hz + shift_hz;
  return out;
}

}  // namespace fhsim
