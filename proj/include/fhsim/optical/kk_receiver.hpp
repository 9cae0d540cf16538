// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "fhsim/common.hpp"
#include "fhsim/filtering.hpp"
#include "fhsim/metrics.hpp"
#include "fhsim/spectral_resample.hpp"

namespace fhsim::optical {

struct KkConfig {
  int oversample = 3;            // internal rate relative to the photocurrent rate
  double epsilon_floor = 1e-12;  // guards ln() against zero samples
  Eigen::Index hilbert_block = Eigen::Index(1) << 18;

  void validate() const {
    if (oversample < 1) throw ConfigError("kk: oversample must be >= 1");
    if (epsilon_floor <= 0.0) throw ConfigError("kk: epsilon_floor must be positive");
  }
};

struct KkResult {
  IqStream field;             // reconstructed complex field at the input rate
  Eigen::Index clamp_count = 0;  // negative input samples clamped to the floor
};

/// Kramers-Kronig field reconstruction: for a minimum-phase field (ensured
/// by a strong co-propagating carrier) the phase is the Hilbert transform of
/// half the log photocurrent. The log/sqrt nonlinearities broaden the
/// spectrum, so the stream is oversampled while the phase is computed.
inline KkResult kk_reconstruct(const RealStream& photocurrent, const KkConfig& cfg) {
  cfg.validate();
  if (photocurrent.size() == 0 || photocurrent.samples.abs().maxCoeff() <= 0.0)
    throw DegenerateInputError("kk_reconstruct: empty or all-zero photocurrent");

  KkResult out;
  VecR current = photocurrent.samples;
  for (Eigen::Index k = 0; k < current.size(); ++k)
    if (current[k] < 0.0) {
      current[k] = cfg.epsilon_floor;
      ++out.clamp_count;
    }

  const double up_rate = photocurrent.rate_hz * cfg.oversample;
  VecR intensity =
      spectral_retune(current.cast<cd>(), photocurrent.rate_hz, up_rate, 0.0).real();
  intensity = intensity.max(cfg.epsilon_floor);  // interpolation can undershoot

  VecC log_env = (0.5 * intensity.log()).cast<cd>();
  // The -j sgn(f) response is Hermitian, so the transform of the real
  // log-envelope comes back in the real part.
  const Eigen::Index block = std::min(cfg.hilbert_block, next_pow2(log_env.size()));
  VecC phase = spectral_filter<cd>(
      log_env, up_rate,
      [](double f) { return f > 0.0 ? cd(0.0, -1.0) : (f < 0.0 ? cd(0.0, 1.0) : cd(0.0, 0.0)); },
      block, -1, log_env.mean());

  VecC field(intensity.size());
  for (Eigen::Index k = 0; k < field.size(); ++k)
    field[k] = std::polar(std::sqrt(intensity[k]), phase[k].real());

  out.field.samples = spectral_retune(field, up_rate, photocurrent.rate_hz, 0.0);
  out.field.rate_hz = photocurrent.rate_hz;
  return out;
}

/// Strips the carrier line (sample mean), shifts the IF band back to
/// baseband and brick-limits to the composite rate, all in one exact
/// spectral remap.
inline IqStream carrier_remove_downconvert(const IqStream& field, double if_hz,
                                           double composite_rate_hz) {
  IqStream centered = field;
  centered.samples -= centered.samples.mean();
  IqStream out = spectral_retune(centered, composite_rate_hz, -if_hz);
  out.center_freq_hz = 0.0;
  return out;
}

/// Fig-3-style link metric: aligns the recovered stream to the reference by
/// integer-lag cross-correlation, fits a complex scalar, and reports
/// P_ref / P_err in dB (capped, scale and phase invariant).
inline double pre_mimo_sinr(const IqStream& recovered, const IqStream& reference,
                            double cap_db = 60.0) {
  if (reference.size() == 0 || reference.power() <= 0.0)
    throw DegenerateInputError("pre_mimo_sinr: empty or silent reference");
  const Eigen::Index n = std::min(recovered.size(), reference.size());
  const VecC ref = reference.samples.head(n);
  VecC rec = recovered.samples.head(n);
  const Eigen::Index lag = xcorr_align(ref, rec, std::min<Eigen::Index>(n / 2, 8192));
  if (lag > 0) {
    VecC shifted = VecC::Zero(n);
    shifted.head(n - lag) = recovered.samples.segment(lag, n - lag);
    rec = shifted;
  } else if (lag < 0) {
    VecC shifted = VecC::Zero(n);
    shifted.tail(n + lag) = recovered.samples.head(n + lag);
    rec = shifted;
  }
  return lsfit_sinr_db(ref, rec, cap_db);
}

}  // namespace fhsim::optical
