// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "fhsim/bbu/channel_estimate.hpp"
#include "fhsim/bbu/miesm.hpp"
#include "fhsim/bbu/mmse.hpp"
#include "fhsim/bbu/rate.hpp"
#include "fhsim/bbu/report.hpp"
#include "fhsim/bbu/sync.hpp"
#include "fhsim/channel/channel_model.hpp"
#include "fhsim/fronthaul/aggregator.hpp"
#include "fhsim/harness/config.hpp"
#include "fhsim/nr/carrier_stack.hpp"
#include "fhsim/nr/ofdm.hpp"
#include "fhsim/nr/resource_grid.hpp"
#include "fhsim/optical/fiber_link.hpp"
#include "fhsim/optical/kk_receiver.hpp"
#include "fhsim/spectral_resample.hpp"

namespace fhsim::harness {

struct PointSpec {
  double snr_db = 0.0;
  int n_ues = 1;
  double length_km = 0.0;
  int drop = 0;
  bool ideal_fh = false;
};

/// Seed for one sweep point. Fiber length and the ideal-FH flag stay out of
/// the chain on purpose: a distance sweep, or an ideal/fiber A/B pair, then
/// reuses the identical wireless realization and payload, so any difference
/// measures the fronthaul and nothing else.
inline std::uint64_t point_seed(std::uint64_t master, const PointSpec& p) {
  std::uint64_t s = derive_seed(master, 0x5EEDu);
  s = derive_seed(s, static_cast<std::uint64_t>(p.n_ues));
  s = derive_seed(s, static_cast<std::uint64_t>(
                         static_cast<std::int64_t>(std::llround(p.snr_db * 1000.0))));
  return derive_seed(s, static_cast<std::uint64_t>(p.drop));
}

/// Upper cap of the linear-fit fronthaul SINR measure; an ideal (bypassed)
/// fronthaul reports exactly this value.
inline constexpr double kPreMimoCapDb = 60.0;

/// Antenna-to-slot interleaving stride, coprime with the slot count and near
/// the golden ratio. Dispersion on the fiber leaks each TDMA slot into its
/// neighbors; with antennas wired to slots in array order that crosstalk is
/// spatially coherent (adjacent elements see nearly the same channel), which
/// both flatters the link metric and concentrates the fold. Striding the
/// mapping whitens slot-adjacent crosstalk the same way any TDM interleaver
/// decorrelates burst errors.
inline int slot_stride(int n) {
  if (n <= 2) return 1;
  int s = static_cast<int>(std::lround(0.618 * n));
  while (std::gcd(s, n) != 1) ++s;
  return s;
}

/// One end-to-end run: waveform, wireless channel, TDMA aggregation, optical
/// IF-over-fiber fronthaul (or the ideal bypass), de-aggregation and the
/// centralized BBU. Deterministic in (cfg, point).
inline bbu::CellReport run_point(const RunConfig& cfg, const PointSpec& point) {
  cfg.validate();
  const nr::CarrierNumerology& num = cfg.numerology;
  const int layers_per_ue = cfg.scenario.layers_per_ue;
  if (point.n_ues < 1 || point.n_ues * layers_per_ue > 12)
    throw ConfigError("run_point: n_ues * layers_per_ue must be in [1, 12]");
  if (point.length_km < 0.0) throw ConfigError("run_point: negative fiber length");

  const std::uint64_t seed = point_seed(cfg.seed, point);
  const int n_layers = point.n_ues * layers_per_ue;
  const int n_rx = cfg.scenario.n_rx_antennas;
  const fronthaul::AggregationPlan plan = cfg.plan();

  // Transmit: independently seeded payload and pilots per carrier, stacked
  // into one composite per layer. A single carrier already sits at the
  // composite rate, so the stack is skipped rather than run at ratio 1.
  std::vector<nr::ResourceGrid> grids(num.n_carriers);
  for (int c = 0; c < num.n_carriers; ++c)
    grids[c] = nr::build_grid(
        num, n_layers, derive_seed(seed, 0xCA0u + static_cast<std::uint64_t>(c)));

  std::vector<IqStream> tx(n_layers);
  {
    std::vector<std::vector<IqStream>> mod(num.n_carriers);
    for (int c = 0; c < num.n_carriers; ++c) mod[c] = nr::ofdm_modulate(grids[c], num);
    double mean_power = 0.0;
    for (int l = 0; l < n_layers; ++l) {
      if (num.n_carriers == 1) {
        tx[l] = std::move(mod[0][l]);
      } else {
        std::vector<IqStream> one(num.n_carriers);
        for (int c = 0; c < num.n_carriers; ++c) one[c] = mod[c][l];
        tx[l] = nr::stack_carriers(one, num);
      }
      mean_power += tx[l].power();
    }
    // One common scale to unit mean layer power, so power control lands the
    // target received SNR without disturbing inter-layer level relations.
    const double g = 1.0 / std::sqrt(mean_power / n_layers);
    for (IqStream& s : tx) s.samples *= g;
  }

  // Wireless segment, realized at the composite rate.
  channel::ScenarioConfig sc = cfg.scenario;
  sc.n_ues = point.n_ues;
  sc.target_rx_snr_db = point.snr_db;
  sc.sample_rate_hz = num.composite_rate_hz();
  channel::ChannelRealization ch = channel::draw_channel(sc, seed);
  channel::power_control(ch, point.snr_db);
  std::vector<IqStream> antennas = channel::apply_channel(tx, ch, seed);
  tx.clear();

  // The fronthaul SINR is judged per de-aggregated lane against the clean
  // per-antenna stream, so keep copies at the rate the lanes come back at.
  std::vector<IqStream> clean;
  if (!point.ideal_fh) clean = antennas;

  if (cfg.fh_oversample > 1)
    for (IqStream& s : antennas)
      s = spectral_retune(s, s.rate_hz * cfg.fh_oversample, 0.0);

  const int stride = slot_stride(n_rx);
  std::vector<IqStream> slots(n_rx);
  for (int a = 0; a < n_rx; ++a) slots[(a * stride) % n_rx] = std::move(antennas[a]);
  IqStream composite = fronthaul::aggregate(slots, plan);
  slots.clear();
  antennas.clear();

  // Fronthaul: IF-over-fiber single sideband with KK detection, or bypass.
  double pre_mimo_db = kPreMimoCapDb;
  IqStream fh_out;
  if (point.ideal_fh) {
    fh_out = std::move(composite);
  } else {
    const Eigen::Index agg_len = composite.size();
    optical::FiberLinkConfig fib = cfg.fiber;
    fib.length_km = point.length_km;
    optical::OpticalField field = optical::ssb_modulate(composite, fib);
    composite.samples.resize(0);
    field = optical::fiber_propagate(field, fib);
    optical::Photocurrent pc = optical::photodetect(field, fib, seed);
    field.field.samples.resize(0);
    optical::KkResult kkr = optical::kk_reconstruct(pc.stream, cfg.kk);
    pc.stream.samples.resize(0);
    fh_out = optical::carrier_remove_downconvert(kkr.field, fib.if_hz,
                                                 plan.composite_rate_hz());
    kkr.field.samples.resize(0);
    fh_out.samples.conservativeResize(agg_len);  // rate-grid padding off
  }

  std::vector<IqStream> recovered = fronthaul::deaggregate(fh_out, plan);
  fh_out.samples.resize(0);
  std::vector<IqStream> lanes(n_rx);
  for (int a = 0; a < n_rx; ++a) lanes[a] = std::move(recovered[(a * stride) % n_rx]);
  recovered.clear();
  if (cfg.fh_oversample > 1)
    for (IqStream& s : lanes) s = spectral_retune(s, num.composite_rate_hz(), 0.0);

  // Fronthaul link quality before any spatial processing: each recovered
  // lane against its clean counterpart, pooled as mean error fraction. The
  // receiver is given no knowledge of the fiber, so the dispersion's bulk
  // group delay stays in the error budget along with the inter-lane fold;
  // this is what collapses with distance while the joint equalizer, which
  // treats the same fold as part of the channel, shrugs it off. Lanes with a
  // silent reference (identity mapping beyond the layer count) are skipped.
  if (!point.ideal_fh) {
    double err_frac = 0.0;
    int n_active = 0;
    for (int a = 0; a < n_rx; ++a) {
      if (clean[a].power() <= 0.0) continue;
      err_frac += db_to_lin(-optical::pre_mimo_sinr(lanes[a], clean[a]));
      ++n_active;
    }
    pre_mimo_db = n_active > 0 ? -lin_to_db(err_frac / n_active) : kPreMimoCapDb;
    clean.clear();
  }

  // Slot timing from the CP correlation, then a quarter-CP rewind so every
  // demod window starts inside the CP even when the delay spread drags the
  // metric peak late. The leftover early offset becomes a per-tone phase
  // ramp that the channel estimate absorbs.
  const Eigen::Index m = static_cast<Eigen::Index>(
      std::llround(num.composite_rate_hz() / num.base_rate_hz()));
  Eigen::Index off = bbu::timing_sync(lanes, num);
  const Eigen::Index margin = m * static_cast<Eigen::Index>(num.cp_length(0) / 4);
  off = off > margin ? off - margin : 0;
  off -= off % m;  // whole base-rate samples, shared by all carriers
  const Eigen::Index base_off = off / m;

  std::vector<std::vector<IqStream>> base(n_rx);
  for (int a = 0; a < n_rx; ++a) {
    if (num.n_carriers == 1)
      base[a] = {std::move(lanes[a])};
    else
      base[a] = nr::split_carriers(lanes[a], num);
  }
  lanes.clear();

  // BBU, one carrier at a time: demodulate all antennas, estimate, equalize.
  // Tone SINRs and payload errors pool across carriers per layer.
  const int n_sc = num.n_subcarriers();
  MatR tone_sinr(static_cast<Eigen::Index>(num.n_carriers) * n_sc, n_layers);
  VecR evm_err = VecR::Zero(n_layers), evm_ref = VecR::Zero(n_layers);

  for (int c = 0; c < num.n_carriers; ++c) {
    std::vector<MatC> ant_grids(n_rx);
    double re_power = 0.0;
    for (int a = 0; a < n_rx; ++a) {
      ant_grids[a] = nr::ofdm_demodulate(base[a][c], base_off, num);
      re_power += ant_grids[a].squaredNorm();
    }
    re_power /= static_cast<double>(n_rx) * n_sc * num.n_symbols;

    bbu::ChannelEstimate est = bbu::channel_estimate(ant_grids, grids[c].dmrs_base, n_layers);
    // A noise-free run otherwise estimates sigma^2 = 0 and the MMSE Gram
    // matrix loses its regularizer; the floor is far below any real noise.
    est.noise_var = std::max(est.noise_var, 1e-12 * re_power);

    std::vector<MatC> y(n_sc);
    for (int k = 0; k < n_sc; ++k) {
      MatC yk(n_rx, num.n_symbols);
      for (int a = 0; a < n_rx; ++a) yk.row(a) = ant_grids[a].row(k);
      y[k] = std::move(yk);
    }
    ant_grids.clear();
    const bbu::MmseResult eq = bbu::mmse_equalize(y, est);

    for (int k = 0; k < n_sc; ++k)
      for (int l = 0; l < n_layers; ++l)
        tone_sinr(static_cast<Eigen::Index>(c) * n_sc + k, l) = eq.post_sinr(k, l);

    for (int l = 0; l < n_layers; ++l) {
      const MatC& ref = grids[c].layers[l];
      for (int k = 0; k < n_sc; ++k)
        for (int t = nr::DmrsConfig::kNumSymbols; t < num.n_symbols; ++t) {
          evm_err[l] += std::norm(eq.xhat[k](l, t) - ref(k, t));
          evm_ref[l] += std::norm(ref(k, t));
        }
    }
  }
  base.clear();

  bbu::CellReport rep;
  rep.snr_db = point.snr_db;
  rep.n_ues = point.n_ues;
  rep.length_km = point.length_km;
  rep.ideal_fh = point.ideal_fh;
  rep.seed = seed;
  rep.pre_mimo_sinr_db = pre_mimo_db;

  const Eigen::Index tones_per_layer = static_cast<Eigen::Index>(num.n_carriers) * n_sc;
  for (int u = 0; u < point.n_ues; ++u) {
    bbu::UeReport ur;
    ur.ue_id = u;
    VecR tones_db(tones_per_layer * layers_per_ue);
    ur.prb_sinr_db.resize(static_cast<Eigen::Index>(layers_per_ue) * num.n_carriers * num.n_prb);
    double lin_sum = 0.0, err = 0.0, refp = 0.0;
    Eigen::Index td = 0, pp = 0;
    for (int v = 0; v < layers_per_ue; ++v) {
      const int l = u * layers_per_ue + v;
      for (Eigen::Index k = 0; k < tones_per_layer; ++k)
        tones_db[td + k] = lin_to_db(tone_sinr(k, l));
      for (int c = 0; c < num.n_carriers; ++c) {
        ur.prb_sinr_db.segment(pp, num.n_prb) =
            bbu::prb_sinr_db(tones_db.segment(td + static_cast<Eigen::Index>(c) * n_sc, n_sc));
        pp += num.n_prb;
      }
      lin_sum += tone_sinr.col(l).sum();
      td += tones_per_layer;
      err += evm_err[l];
      refp += evm_ref[l];
    }
    ur.post_sinr_db = lin_to_db(lin_sum / static_cast<double>(tones_db.size()));
    ur.eff_sinr_db = bbu::miesm_effective_db(tones_db);
    ur.se_bits = bbu::se_bits(ur.eff_sinr_db);
    ur.rate_bps = layers_per_ue * bbu::rate_bps(ur.se_bits, num);
    ur.evm_rms = refp > 0.0 ? std::sqrt(err / refp) : 0.0;
    rep.ues.push_back(std::move(ur));
  }
  rep.cell_rate_bps = bbu::cell_throughput(rep.ues);
  return rep;
}

}  // namespace fhsim::harness
