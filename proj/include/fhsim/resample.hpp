// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "fhsim/common.hpp"

namespace fhsim {

/// Zeroth-order modified Bessel function, for Kaiser windows.
inline double bessel_i0(double x) {
  double sum = 1.0, term = 1.0;
  const double hx = 0.5 * x;
  for (int k = 1; k < 64; ++k) {
    term *= (hx / k) * (hx / k);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

/// Band plan for one resampling hop. `pass_hz`/`stop_hz` are one-sided edges
/// of the anti-alias/anti-image lowpass; attenuation picks the Kaiser beta
/// and the kernel length via the usual estimate N = (A-8)/(2.285*dw).
struct ResampleSpec {
  double pass_hz = 0.0;
  double stop_hz = 0.0;
  double atten_db = 90.0;
  int max_taps = 768;
  int min_taps = 16;

  static ResampleSpec for_rates(double f_in, double f_out, double occupied_bw_hz,
                                double atten_db = 90.0) {
    const double nyq = 0.5 * std::min(f_in, f_out);
    ResampleSpec s;
    s.pass_hz = std::min(0.5 * occupied_bw_hz, 0.98 * nyq);
    s.stop_hz = nyq;
    s.atten_db = atten_db;
    if (s.stop_hz - s.pass_hz < 1e-6 * nyq) s.pass_hz = 0.9 * nyq;
    return s;
  }
};

/// Polyphase windowed-sinc resampler for arbitrary (not necessarily rational)
/// rate pairs. The kernel is a continuous-time Kaiser-windowed sinc sampled
/// on the input grid; output sample k is the kernel dotted with the inputs
/// around t = k / f_out, so the operation is zero-phase: t = 0 in maps to
/// t = 0 out and no bulk group delay is introduced anywhere in the pipeline.
/// Out-of-range input samples are treated as zero.
class SincResampler {
 public:
  SincResampler(double f_in, double f_out, ResampleSpec spec)
      : f_in_(f_in), f_out_(f_out) {
    const double tw = spec.stop_hz - spec.pass_hz;
    const double fc = 0.5 * (spec.pass_hz + spec.stop_hz);
    const double dw = 2.0 * kPi * tw / f_in;
    int taps = static_cast<int>(std::ceil((spec.atten_db - 8.0) / (2.285 * dw)));
    taps = std::clamp(taps, spec.min_taps, spec.max_taps);
    if (taps % 2) ++taps;
    n_taps_ = taps;
    const double a = spec.atten_db;
    double beta = 0.0;
    if (a > 50.0)
      beta = 0.1102 * (a - 8.7);
    else if (a >= 21.0)
      beta = 0.5842 * std::pow(a - 21.0, 0.4) + 0.07886 * (a - 21.0);

    // Phase table: row p holds the kernel sampled at fractional offset
    // p / kPhases; an extra row allows linear interpolation between rows.
    table_.resize(static_cast<size_t>(kPhases + 1) * n_taps_);
    const double i0b = bessel_i0(beta);
    const double half = n_taps_ / 2.0;
    const double fc_norm = fc / f_in;  // cycles per input sample
    for (int p = 0; p <= kPhases; ++p) {
      const double frac = static_cast<double>(p) / kPhases;
      double row_sum = 0.0;
      for (int i = 0; i < n_taps_; ++i) {
        // Input sample index relative to base: i - n_taps/2 + 1; its time
        // offset from the output instant is (index - frac).
        const double t = (i - half + 1.0) - frac;
        const double x = t / half;
        double w = 0.0;
        if (std::abs(x) <= 1.0) w = bessel_i0(beta * std::sqrt(1.0 - x * x)) / i0b;
        const double arg = 2.0 * kPi * fc_norm * t;
        const double s = (std::abs(arg) < 1e-12) ? 1.0 : std::sin(arg) / arg;
        const double v = 2.0 * fc_norm * s * w;
        table_[static_cast<size_t>(p) * n_taps_ + i] = v;
        row_sum += v;
      }
      // Per-phase DC normalization: flat gain for in-band content and no
      // sample-rate-periodic amplitude ripple.
      const double g = 1.0 / row_sum;
      for (int i = 0; i < n_taps_; ++i) table_[static_cast<size_t>(p) * n_taps_ + i] *= g;
    }
  }

  int taps() const { return n_taps_; }

  Eigen::Index output_size(Eigen::Index n_in) const {
    return static_cast<Eigen::Index>(std::llround(static_cast<double>(n_in) * f_out_ / f_in_));
  }

  template <typename Scalar>
  Vec<Scalar> apply(const Vec<Scalar>& in) const {
    const Eigen::Index n_out = output_size(in.size());
    Vec<Scalar> out(n_out);
    const double step = f_in_ / f_out_;
    const int half = n_taps_ / 2;
    for (Eigen::Index k = 0; k < n_out; ++k) {
      const double pos = static_cast<double>(k) * step;
      const auto base = static_cast<Eigen::Index>(std::floor(pos));
      const double frac = pos - static_cast<double>(base);
      const double pf = frac * kPhases;
      const int p = static_cast<int>(pf);
      const double pfrac = pf - p;
      const double* row0 = &table_[static_cast<size_t>(p) * n_taps_];
      const double* row1 = row0 + n_taps_;
      const Eigen::Index first = base - half + 1;
      Scalar acc{};
      if (first >= 0 && first + n_taps_ <= in.size()) {
        const Scalar* src = in.data() + first;
        for (int i = 0; i < n_taps_; ++i)
          acc += src[i] * (row0[i] + pfrac * (row1[i] - row0[i]));
      } else {
        for (int i = 0; i < n_taps_; ++i) {
          const Eigen::Index idx = first + i;
          if (idx < 0 || idx >= in.size()) continue;
          acc += in[idx] * (row0[i] + pfrac * (row1[i] - row0[i]));
        }
      }
      out[k] = acc;
    }
    return out;
  }

 private:
  static constexpr int kPhases = 1024;
  double f_in_, f_out_;
  int n_taps_ = 0;
  std::vector<double> table_;
};

/// One-shot resampling of a stream to a new rate.
inline IqStream resample(const IqStream& in, double f_out, ResampleSpec spec) {
  SincResampler r(in.rate_hz, f_out, spec);
  return {r.apply<cd>(in.samples), f_out, in.center_freq_hz};
}

inline RealStream resample(const RealStream& in, double f_out, ResampleSpec spec) {
  SincResampler r(in.rate_hz, f_out, spec);
  return {r.apply<double>(in.samples), f_out};
}

}  // namespace fhsim
