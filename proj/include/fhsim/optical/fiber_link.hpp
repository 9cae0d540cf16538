// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <fstream>
#include <string>

#include "fhsim/common.hpp"
#include "fhsim/fft.hpp"
#include "fhsim/rng.hpp"
#include "fhsim/spectral_resample.hpp"

namespace fhsim::optical {

/// Analog/optical path settings: IF-over-fiber SSB with a co-propagating
/// carrier, dispersive SMF, square-law detection and an 8-bit ADC.
struct FiberLinkConfig {
  double length_km = 0.0;
  double dispersion_ps_nm_km = 17.0;
  double wavelength_nm = 1550.0;
  double if_hz = 14e9;
  double cspr_db = 11.0;
  double dac_rate_hz = 88e9;
  double adc_rate_hz = 80e9;
  int adc_bits = 8;  // 0 disables quantization
  double rx_noise_power = 0.0;  // photocurrent-domain AWGN variance, 0 = off

  void validate() const {
    if (length_km < 0.0) throw ConfigError("fiber: negative length");
    if (if_hz <= 0.0 || dac_rate_hz <= 0.0 || adc_rate_hz <= 0.0)
      throw ConfigError("fiber: rates and IF must be positive");
    if (adc_bits < 0 || adc_bits > 16) throw ConfigError("fiber: adc_bits out of range");
    if (!std::isfinite(cspr_db)) throw ConfigError("fiber: cspr_db must be finite");
  }
};

/// Complex optical field envelope around the laser line, plus the carrier
/// bookkeeping needed to measure CSPR downstream.
struct OpticalField {
  IqStream field;  // at dac_rate, center_freq_hz = 0 means the laser line
  double carrier_amp = 0.0;
  double signal_power = 0.0;
};

/// Photodetector + ADC output with the clipping tally for the quantizer.
struct Photocurrent {
  RealStream stream;
  Eigen::Index clip_count = 0;
  double clip_fraction = 0.0;
};

namespace detail {

/// Pads the record with zeros so every rate in the optical chain lands on
/// an integer, FFT-friendly sample count over a common time window.
inline VecC pad_to_rate_grid(const VecC& x, double rate, const FiberLinkConfig& cfg) {
  const Eigen::Index q =
      rate_block_quantum(rate, {rate, cfg.dac_rate_hz, cfg.adc_rate_hz, cfg.if_hz});
  const Eigen::Index blocks = next_smooth((x.size() + q - 1) / q);
  VecC padded = VecC::Zero(blocks * q);
  padded.head(x.size()) = x;
  return padded;
}

}  // namespace detail

/// Upconverts the composite to the IF as a single sideband of the optical
/// carrier and adds the carrier tone at the configured CSPR. The resample
/// to dac_rate and the IF shift are one exact spectral remap, equivalent to
/// ideal interpolation followed by multiplication with e^{+j 2 pi f_IF t}.
inline OpticalField ssb_modulate(const IqStream& composite, const FiberLinkConfig& cfg) {
  cfg.validate();
  if (cfg.if_hz + composite.rate_hz / 2.0 > cfg.dac_rate_hz / 2.0)
    throw ConfigError("ssb_modulate: IF plus composite half-bandwidth exceeds DAC Nyquist");
  IqStream padded;
  padded.samples = detail::pad_to_rate_grid(composite.samples, composite.rate_hz, cfg);
  padded.rate_hz = composite.rate_hz;

  OpticalField out;
  out.field = spectral_retune(padded, cfg.dac_rate_hz, cfg.if_hz);
  out.field.center_freq_hz = 0.0;  // envelope is referenced to the laser line
  out.signal_power = out.field.power();
  // CSPR is undefined for a silent input; emit a unit carrier.
  out.carrier_amp = out.signal_power > 0.0
                        ? std::sqrt(out.signal_power * db_to_lin(cfg.cspr_db))
                        : 1.0;
  out.field.samples += out.carrier_amp;
  return out;
}

/// Chromatic dispersion of standard SMF as the all-pass frequency response
/// H(f) = exp(+j pi D lambda^2 f^2 L / c), f relative to the laser line.
/// Applied over the whole record, so it is exactly unitary and additive in
/// length.
inline OpticalField fiber_propagate(const OpticalField& in, const FiberLinkConfig& cfg) {
  cfg.validate();
  OpticalField out = in;
  if (cfg.length_km == 0.0 || in.field.size() == 0) return out;
  const double d_si = cfg.dispersion_ps_nm_km * 1e-6;  // s/m^2
  const double lambda = cfg.wavelength_nm * 1e-9;
  const double coef = kPi * d_si * lambda * lambda * cfg.length_km * 1e3 / kSpeedOfLight;
  FftEngine fft;
  VecC spec = fft.fwd(in.field.samples);
  const Eigen::Index n = spec.size();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double f = fft_bin_freq(k, n, in.field.rate_hz);
    spec[k] *= cd(std::cos(coef * f * f), std::sin(coef * f * f));
  }
  out.field.samples = fft.inv(spec);
  return out;
}

/// Square-law detection, optional receiver noise, ADC resampling and
/// mid-rise quantization over mean +- 4 sigma of the photocurrent (samples
/// outside the span clip and are counted).
inline Photocurrent photodetect(const OpticalField& in, const FiberLinkConfig& cfg,
                                std::uint64_t seed) {
  cfg.validate();
  VecC current = in.field.samples.abs2().cast<cd>();
  if (cfg.rx_noise_power > 0.0) {
    Rng rng(derive_seed(seed, 0x41));
    current += std::sqrt(cfg.rx_noise_power) * rng.normal_vec(current.size()).cast<cd>();
  }
  VecR sampled =
      spectral_retune(current, in.field.rate_hz, cfg.adc_rate_hz, 0.0).real();

  Photocurrent out;
  out.stream.rate_hz = cfg.adc_rate_hz;
  if (cfg.adc_bits > 0) {
    const double mean = sampled.mean();
    const double sigma = std::sqrt((sampled - mean).abs2().mean());
    const double half_span = 4.0 * sigma;
    const double step = 2.0 * half_span / static_cast<double>(1LL << cfg.adc_bits);
    const double top = half_span - step / 2.0;
    for (Eigen::Index k = 0; k < sampled.size(); ++k) {
      double v = sampled[k] - mean;
      if (v > top || v < -top) {
        ++out.clip_count;
        v = std::clamp(v, -top, top);
      } else {
        v = step * (std::floor(v / step) + 0.5);
      }
      sampled[k] = mean + v;
    }
    out.clip_fraction =
        static_cast<double>(out.clip_count) / static_cast<double>(sampled.size());
  }
  out.stream.samples = std::move(sampled);
  return out;
}

/// Welch-style averaged spectrum (Hann window, 50% overlap) written as
/// "freq_hz,power_db" CSV rows, bins ordered from -rate/2 to +rate/2.
inline void spectrum_csv(const IqStream& x, const std::string& path,
                         Eigen::Index nfft = 8192) {
  if (x.size() < nfft) nfft = next_pow2(x.size() / 2 + 1) / 2;
  if (nfft < 16) throw DegenerateInputError("spectrum_csv: record too short");
  VecR win(nfft);
  for (Eigen::Index i = 0; i < nfft; ++i)
    win[i] = 0.5 - 0.5 * std::cos(2.0 * kPi * i / nfft);
  const double wnorm = win.abs2().sum();
  FftEngine fft;
  VecR acc = VecR::Zero(nfft);
  Eigen::Index n_seg = 0;
  for (Eigen::Index s = 0; s + nfft <= x.size(); s += nfft / 2, ++n_seg)
    acc += fft.fwd(x.samples.segment(s, nfft) * win.cast<cd>()).abs2();
  acc /= (static_cast<double>(n_seg) * wnorm);

  std::ofstream f(path);
  if (!f) throw Error("spectrum_csv: cannot open " + path);
  f << "freq_hz,power_db\n";
  for (Eigen::Index i = 0; i < nfft; ++i) {
    const Eigen::Index s = i - nfft / 2;  // signed bin, ordered from -rate/2
    const Eigen::Index k = s >= 0 ? s : s + nfft;
    const double freq =
        x.center_freq_hz + static_cast<double>(s) * x.rate_hz / static_cast<double>(nfft);
    f << freq << "," << lin_to_db(std::max(acc[k], 1e-30)) << "\n";
  }
}

}  // namespace fhsim::optical
