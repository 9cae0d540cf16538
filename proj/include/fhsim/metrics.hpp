// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>

#include "fhsim/common.hpp"
#include "fhsim/fft.hpp"

namespace fhsim {

/// SINR of `test` against `ref` after a least-squares complex scalar fit
/// test ~= alpha * ref. Signal power is |alpha|^2 * P_ref, error power is the
/// residual, which makes the metric invariant to scaling and constant phase
/// rotation of `test`. Capped at `cap_db` (exact matches would be +inf).
inline double lsfit_sinr_db(const VecC& ref, const VecC& test, double cap_db = 60.0) {
  if (ref.size() != test.size()) throw DimensionError("lsfit_sinr_db: length mismatch");
  const double p_ref = ref.abs2().sum();
  if (p_ref <= 0.0) throw DegenerateInputError("lsfit_sinr_db: zero reference power");
  const cd alpha = (ref.conjugate() * test).sum() / p_ref;
  const double p_sig = std::norm(alpha) * p_ref;
  const double p_err = (test - alpha * ref).abs2().sum();
  if (p_err <= 0.0 || p_sig / p_err > db_to_lin(cap_db)) return cap_db;
  return lin_to_db(p_sig / p_err);
}

/// Integer lag maximizing |xcorr(ref, test)|, limited to |lag| <= max_lag.
/// Positive lag means `test` is delayed relative to `ref`.
inline Eigen::Index xcorr_align(const VecC& ref, const VecC& test, Eigen::Index max_lag) {
  const Eigen::Index n = std::min(ref.size(), test.size());
  const Eigen::Index nfft = next_pow2(2 * n);
  VecC a = VecC::Zero(nfft), b = VecC::Zero(nfft);
  a.head(n) = ref.head(n);
  b.head(n) = test.head(n);
  FftEngine fft;
  VecC corr = fft.inv(fft.fwd(a).conjugate() * fft.fwd(b));
  Eigen::Index best = 0;
  double best_mag = -1.0;
  for (Eigen::Index lag = -max_lag; lag <= max_lag; ++lag) {
    const Eigen::Index idx = lag >= 0 ? lag : nfft + lag;
    const double m = std::abs(corr[idx]);
    if (m > best_mag) {
      best_mag = m;
      best = lag;
    }
  }
  return best;
}

/// RMS error vector magnitude of equalized symbols vs their references.
inline double evm_rms(const VecC& ref, const VecC& eq) {
  if (ref.size() != eq.size()) throw DimensionError("evm_rms: length mismatch");
  const double p_ref = ref.abs2().mean();
  if (p_ref <= 0.0) throw DegenerateInputError("evm_rms: zero reference power");
  return std::sqrt((eq - ref).abs2().mean() / p_ref);
}

}  // namespace fhsim
