// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "fhsim/channel/scenario.hpp"
#include "fhsim/common.hpp"
#include "fhsim/fft.hpp"
#include "fhsim/resample.hpp"
#include "fhsim/rng.hpp"

namespace fhsim::channel {

/// One resolvable multipath cluster: a shared propagation delay and one
/// complex gain per receive antenna (steering phase times the cluster gain).
struct ClusterTap {
  double delay_s = 0.0;
  VecC gain;  // n_rx entries
};

/// A drawn channel instance. `clusters[l]` lists the taps of layer l;
/// `tx_scale[l]` is the amplitude applied to that layer's transmit stream
/// (set by power_control, 1.0 until then). Layers are grouped per UE in
/// blocks of `layers_per_ue`.
struct ChannelRealization {
  std::vector<std::vector<ClusterTap>> clusters;
  VecR tx_scale;
  double noise_power = 0.0;  // complex noise variance per antenna sample
  double sample_rate_hz = 0.0;
  int n_rx = 0;
  int layers_per_ue = 1;
  int frac_delay_taps = 32;

  int n_layers() const { return static_cast<int>(clusters.size()); }
};

/// Half-wavelength uniform planar array response. Antenna a sits at column
/// a%cols (horizontal) and row a/cols (vertical).
inline VecC steering_vector(int rows, int cols, double az_rad, double el_rad) {
  VecC a(rows * cols);
  const double u = std::sin(az_rad) * std::cos(el_rad);
  const double v = std::sin(el_rad);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      a[r * cols + c] = std::polar(1.0, kPi * (c * u + r * v));
  return a;
}

namespace detail {

/// Uniform position in a 120-degree wedge of the hexagonal cell. The hexagon
/// has circumradius ISD/sqrt(3); the radial boundary depends on the azimuth
/// within the wedge. Rejection-free: draw azimuth, then radius with the
/// sqrt law for uniform area density.
inline void draw_ue_position(const ScenarioConfig& sc, Rng& rng, double& dist_m,
                             double& az_rad) {
  const double r_hex = sc.inter_site_distance_m / std::sqrt(3.0);
  az_rad = rng.uniform(-kPi / 3.0, kPi / 3.0);
  // Distance from center to hex edge at this azimuth (vertex at az=0).
  double a = std::fmod(std::abs(az_rad), kPi / 3.0);
  const double r_edge = r_hex * std::cos(kPi / 6.0) / std::cos(a - kPi / 6.0);
  const double r_min = std::min(sc.min_distance_m, r_edge);
  dist_m = std::sqrt(rng.uniform(r_min * r_min / (r_edge * r_edge), 1.0)) * r_edge;
}

}  // namespace detail

/// Draws the clustered multipath channel for every layer. Cluster delays
/// follow an exponential profile with the configured RMS delay spread
/// (earliest cluster shifted to zero), cluster powers decay exponentially in
/// delay with lognormal shadowing and are normalized to unit total, so the
/// expected per-antenna gain of each layer is exactly 1. Angles are drawn
/// around the UE's line-of-sight direction. Deterministic in (sc, seed).
inline ChannelRealization draw_channel(const ScenarioConfig& sc, std::uint64_t seed) {
  sc.validate();
  ChannelRealization ch;
  ch.noise_power = sc.noise_enabled ? 1.0 : 0.0;
  ch.sample_rate_hz = sc.sample_rate_hz;
  ch.n_rx = sc.n_rx_antennas;
  ch.layers_per_ue = sc.layers_per_ue;
  ch.frac_delay_taps = sc.frac_delay_taps;
  ch.tx_scale = VecR::Ones(sc.n_layers());
  ch.clusters.resize(sc.n_layers());

  if (sc.identity) {
    for (auto& layer : ch.clusters)
      layer.push_back({0.0, VecC::Ones(sc.n_rx_antennas)});
    return ch;
  }

  const double deg = kPi / 180.0;
  for (int u = 0; u < sc.n_ues; ++u) {
    Rng rng(derive_seed(seed, 0x200 + static_cast<std::uint64_t>(u)));
    double dist, az_ue;
    detail::draw_ue_position(sc, rng, dist, az_ue);
    const double el_ue = std::atan2(sc.ue_height_m - sc.bs_height_m, dist);

    for (int v = 0; v < sc.layers_per_ue; ++v) {
      const int n_c = sc.n_clusters;
      VecR delay(n_c), power(n_c);
      for (int c = 0; c < n_c; ++c)
        delay[c] = -sc.delay_spread_s * std::log(1.0 - rng.uniform());
      std::sort(delay.begin(), delay.end());
      delay -= delay[0];
      for (int c = 0; c < n_c; ++c) {
        const double decay =
            sc.delay_spread_s > 0.0 ? std::exp(-delay[c] / sc.delay_spread_s) : 1.0;
        const double shadow_db = sc.cluster_shadow_sigma_db * rng.normal();
        power[c] = decay * db_to_lin(shadow_db);
      }
      power /= power.sum();

      std::vector<ClusterTap> taps(n_c);
      for (int c = 0; c < n_c; ++c) {
        const double az = az_ue + sc.cluster_azimuth_spread_deg * deg * rng.normal();
        const double el = el_ue + sc.cluster_elevation_spread_deg * deg * rng.normal();
        const cd g = std::sqrt(power[c]) * rng.cnormal();
        taps[c].delay_s = delay[c];
        taps[c].gain = g * steering_vector(sc.array_rows, sc.array_cols, az, el);
      }
      ch.clusters[u * sc.layers_per_ue + v] = std::move(taps);
    }
  }
  return ch;
}

namespace detail {

/// Kaiser-windowed sinc interpolation kernel realizing one cluster on the
/// sample grid. Taps live at integer positions p in [floor(d)-T/2+1,
/// floor(d)+T/2] for delay d in samples; an exact integer delay collapses to
/// a single unit tap. `lead` taps of pre-ring before p=0 are kept and the
/// caller compensates, so delay 0 stays aligned with the input.
constexpr double kFracDelayBeta = 8.96;

inline int fir_lead(int taps) { return taps / 2 - 1; }

inline int fir_length(const std::vector<ClusterTap>& taps, double fs, int n_taps) {
  double max_d = 0.0;
  for (const auto& t : taps) max_d = std::max(max_d, t.delay_s);
  return static_cast<int>(std::floor(max_d * fs)) + n_taps + fir_lead(n_taps);
}

inline void add_cluster_fir(MatC& fir, const ClusterTap& tap, double fs, int n_taps) {
  const double d = tap.delay_s * fs;
  const int base = static_cast<int>(std::floor(d));
  const int half = n_taps / 2;
  const int lead = fir_lead(n_taps);
  const double denom = bessel_i0(kFracDelayBeta);
  for (int j = 0; j < n_taps; ++j) {
    const int p = base - half + 1 + j;
    const double x = static_cast<double>(p) - d;
    if (p + lead < 0 || p + lead >= fir.cols()) continue;
    const double u = x / half;
    if (std::abs(u) >= 1.0 && x != 0.0) continue;
    const double win = bessel_i0(kFracDelayBeta * std::sqrt(std::max(0.0, 1.0 - u * u))) / denom;
    const double sinc = x == 0.0 ? 1.0 : std::sin(kPi * x) / (kPi * x);
    fir.col(p + lead) += (win * sinc) * tap.gain.matrix();
  }
}

}  // namespace detail

/// Realizes one layer's clusters as per-antenna FIR filters at the
/// realization's sample rate (rows = antennas). Column c of the result acts
/// on input sample k-c+lead, i.e. the kernel pre-ring is absorbed so a
/// zero-delay cluster leaves the signal in place.
inline MatC realize_fir(const ChannelRealization& ch, int layer) {
  const auto& taps = ch.clusters.at(layer);
  const int len = detail::fir_length(taps, ch.sample_rate_hz, ch.frac_delay_taps);
  MatC fir = MatC::Zero(ch.n_rx, len);
  for (const auto& t : taps) {
    if (t.gain.size() != ch.n_rx) throw DimensionError("cluster gain size != n_rx");
    detail::add_cluster_fir(fir, t, ch.sample_rate_hz, ch.frac_delay_taps);
  }
  return fir;
}

/// Scales each UE's transmit amplitude so its mean per-antenna received SNR
/// (realized tap energy over noise power, averaged over antennas, summed
/// over the UE's layers) hits target_rx_snr_db exactly for unit-power
/// transmit streams. Pure function of the unscaled taps, so re-running is a
/// no-op and scaling all gains by g just divides tx_scale by g. With the
/// noise disabled the target is undefined and the scales stay at 1.
inline void power_control(ChannelRealization& ch, double target_rx_snr_db) {
  const int n_ues = ch.n_layers() / ch.layers_per_ue;
  ch.tx_scale = VecR::Ones(ch.n_layers());
  if (ch.noise_power <= 0.0) return;
  const double target = db_to_lin(target_rx_snr_db) * ch.noise_power;
  for (int u = 0; u < n_ues; ++u) {
    double energy = 0.0;
    for (int v = 0; v < ch.layers_per_ue; ++v) {
      const MatC fir = realize_fir(ch, u * ch.layers_per_ue + v);
      energy += fir.squaredNorm() / ch.n_rx;
    }
    if (energy <= 0.0)
      throw DegenerateInputError("power_control: UE " + std::to_string(u) +
                                 " has an all-zero channel");
    const double s = std::sqrt(target / energy);
    for (int v = 0; v < ch.layers_per_ue; ++v) ch.tx_scale[u * ch.layers_per_ue + v] = s;
  }
}

namespace detail {

/// Multi-input multi-output FIR filtering via block overlap-add: one forward
/// FFT per (layer, block), one inverse per (antenna, block), accumulating
/// sum_l x_l * h_{l,a}. Returns the full linear convolution (n + L - 1).
inline std::vector<VecC> mimo_convolve(const std::vector<VecC>& inputs,
                                       const std::vector<MatC>& firs) {
  const int n_layers = static_cast<int>(inputs.size());
  if (static_cast<int>(firs.size()) != n_layers)
    throw DimensionError("mimo_convolve: inputs/firs size mismatch");
  const int n_rx = static_cast<int>(firs[0].rows());
  const Eigen::Index n = inputs[0].size();
  Eigen::Index fir_len = 0;
  for (const auto& f : firs) fir_len = std::max(fir_len, f.cols());
  const Eigen::Index block = std::max<Eigen::Index>(1024, next_pow2(4 * fir_len));
  const Eigen::Index seg = block - fir_len + 1;

  FftEngine fft;
  std::vector<std::vector<VecC>> spectra(n_layers);  // [layer][antenna], block bins
  {
    VecC padded = VecC::Zero(block);
    for (int l = 0; l < n_layers; ++l) {
      if (inputs[l].size() != n) throw DimensionError("mimo_convolve: ragged inputs");
      spectra[l].resize(n_rx);
      for (int a = 0; a < n_rx; ++a) {
        padded.setZero();
        padded.head(firs[l].cols()) = firs[l].row(a).transpose().array();
        spectra[l][a] = fft.fwd(padded);
      }
    }
  }

  std::vector<VecC> out(n_rx, VecC::Zero(n + fir_len - 1));
  VecC xpad = VecC::Zero(block), acc(block);
  std::vector<VecC> xf(n_layers);
  for (Eigen::Index s = 0; s < n; s += seg) {
    const Eigen::Index len = std::min(seg, n - s);
    for (int l = 0; l < n_layers; ++l) {
      xpad.setZero();
      xpad.head(len) = inputs[l].segment(s, len);
      xf[l] = fft.fwd(xpad);
    }
    const Eigen::Index keep = std::min(block, n + fir_len - 1 - s);
    for (int a = 0; a < n_rx; ++a) {
      acc.setZero();
      for (int l = 0; l < n_layers; ++l) acc += xf[l] * spectra[l][a];
      out[a].segment(s, keep) += fft.inv(acc).head(keep);
    }
  }
  return out;
}

}  // namespace detail

/// Pushes per-layer transmit streams through the drawn channel: scales each
/// layer by its tx_scale, convolves with the realized per-antenna FIRs, sums
/// across layers and adds white complex noise of ch.noise_power per antenna.
/// Output streams keep the convolution tail minus the kernel pre-ring, so a
/// tap at delay d lands d*fs samples after its input position.
inline std::vector<IqStream> apply_channel(const std::vector<IqStream>& tx,
                                           const ChannelRealization& ch,
                                           std::uint64_t seed) {
  if (static_cast<int>(tx.size()) != ch.n_layers())
    throw DimensionError("apply_channel: stream count != layer count");
  const Eigen::Index n = tx[0].size();
  std::vector<VecC> inputs(tx.size());
  std::vector<MatC> firs(tx.size());
  for (size_t l = 0; l < tx.size(); ++l) {
    if (tx[l].size() != n) throw DimensionError("apply_channel: ragged input streams");
    if (std::abs(tx[l].rate_hz - ch.sample_rate_hz) > 1e-3)
      throw ConfigError("apply_channel: stream rate != channel sample rate");
    inputs[l] = ch.tx_scale[static_cast<Eigen::Index>(l)] * tx[l].samples;
    firs[l] = realize_fir(ch, static_cast<int>(l));
  }

  auto conv = detail::mimo_convolve(inputs, firs);
  const int lead = detail::fir_lead(ch.frac_delay_taps);
  std::vector<IqStream> rx(ch.n_rx);
  for (int a = 0; a < ch.n_rx; ++a) {
    const Eigen::Index len = conv[a].size() - lead;
    IqStream& s = rx[a];
    s.rate_hz = ch.sample_rate_hz;
    s.center_freq_hz = tx[0].center_freq_hz;
    s.samples = conv[a].segment(lead, len);
    if (ch.noise_power > 0.0) {
      Rng rng(derive_seed(seed, 0x300 + static_cast<std::uint64_t>(a)));
      s.samples += std::sqrt(ch.noise_power) * rng.cnormal_vec(len);
    }
  }
  return rx;
}

}  // namespace fhsim::channel
