// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "fhsim/common.hpp"
#include "fhsim/nr/dmrs.hpp"

namespace fhsim::bbu {

enum class EstimateGranularity { kPerSubcarrier, kPerPrb };

/// Frequency response estimate per (subcarrier, rx antenna, layer) plus the
/// per-antenna noise variance of one frequency-domain resource element.
struct ChannelEstimate {
  std::vector<MatC> h;  // n_subcarriers entries, each n_rx x n_layers
  double noise_var = 0.0;
  EstimateGranularity granularity = EstimateGranularity::kPerSubcarrier;

  Eigen::Index n_subcarriers() const { return static_cast<Eigen::Index>(h.size()); }
  Eigen::Index n_rx() const { return h.empty() ? 0 : h[0].rows(); }
  Eigen::Index n_layers() const { return h.empty() ? 0 : h[0].cols(); }
};

/// Pilot-reverse modulation per receive antenna: de-cover each layer's CDM
/// resource (2 subcarriers x 2 symbols, Gram = 4I), LS-estimate the channel
/// at the resource center, interpolate linearly in frequency to every
/// subcarrier (flat beyond the first/last pilot position).
///
/// The noise variance comes from the pilot-symbol residual after removing
/// every estimated layer: each CDM resource has 4 - (ports in its group)
/// signature-free dimensions, and resources of unoccupied groups are empty
/// on the air, so all of their 4 dimensions carry only noise. With all 12
/// ports active there is no free dimension and the estimate falls back to
/// differences of neighboring pilot estimates.
inline ChannelEstimate channel_estimate(const std::vector<MatC>& ant_grids,
                                        const MatC& dmrs_base, int n_layers) {
  if (ant_grids.empty()) throw DimensionError("channel_estimate: no antenna grids");
  if (n_layers < 1 || n_layers > nr::DmrsConfig::kMaxPorts)
    throw LayerCapacityError("channel_estimate: layer count outside 1..12");
  const Eigen::Index n_sc = ant_grids[0].rows();
  const Eigen::Index n_sym = ant_grids[0].cols();
  const auto n_rx = static_cast<Eigen::Index>(ant_grids.size());
  if (n_sc % 6 != 0) throw DimensionError("channel_estimate: subcarriers not a multiple of 6");
  if (n_sym < nr::DmrsConfig::kNumSymbols)
    throw DimensionError("channel_estimate: grid lacks the pilot symbols");
  if (dmrs_base.rows() != n_sc || dmrs_base.cols() != nr::DmrsConfig::kNumSymbols)
    throw DimensionError("channel_estimate: missing or mismatched pilot sequence");
  for (const auto& g : ant_grids)
    if (g.rows() != n_sc || g.cols() != n_sym)
      throw DimensionError("channel_estimate: antenna grids disagree in shape");

  const Eigen::Index n_span = n_sc / 6;
  std::vector<nr::DmrsPort> ports(n_layers);
  int ports_in_group[3] = {0, 0, 0};
  for (int p = 0; p < n_layers; ++p) {
    ports[p] = nr::DmrsConfig::port(p);
    ++ports_in_group[ports[p].cdm_group];
  }
  int free_dims_per_span = 0;
  for (int g = 0; g < 3; ++g) free_dims_per_span += 4 - ports_in_group[g];

  // raw(a) is n_span x n_layers: the de-covered LS estimate at each pilot
  // resource, attached to frequency position 6s + 2g + 0.5.
  std::vector<MatC> raw(n_rx, MatC(n_span, n_layers));
  double resid_power = 0.0;
  for (Eigen::Index a = 0; a < n_rx; ++a) {
    const MatC& grid = ant_grids[a];
    for (Eigen::Index s = 0; s < n_span; ++s) {
      for (int p = 0; p < n_layers; ++p) {
        const auto comb = nr::DmrsConfig::comb_offsets(ports[p].cdm_group);
        cd acc(0.0, 0.0);
        for (int kp = 0; kp < 2; ++kp)
          for (int t = 0; t < nr::DmrsConfig::kNumSymbols; ++t) {
            const Eigen::Index k = 6 * s + comb[kp];
            acc += static_cast<double>(ports[p].wf[kp] * ports[p].wt[t]) *
                   std::conj(dmrs_base(k, t)) * grid(k, t);
          }
        raw[a](s, p) = 0.25 * acc;
      }
      if (free_dims_per_span > 0) {
        for (int g = 0; g < 3; ++g) {
          const auto comb = nr::DmrsConfig::comb_offsets(g);
          for (int kp = 0; kp < 2; ++kp)
            for (int t = 0; t < nr::DmrsConfig::kNumSymbols; ++t) {
              const Eigen::Index k = 6 * s + comb[kp];
              cd expected(0.0, 0.0);
              for (int p = 0; p < n_layers; ++p)
                if (ports[p].cdm_group == g)
                  expected += raw[a](s, p) *
                              static_cast<double>(ports[p].wf[kp] * ports[p].wt[t]) *
                              dmrs_base(k, t);
              resid_power += std::norm(grid(k, t) - expected);
            }
        }
      }
    }
  }

  ChannelEstimate est;
  if (free_dims_per_span > 0) {
    est.noise_var = resid_power / (static_cast<double>(n_rx * n_span) * free_dims_per_span);
  } else {
    double diff = 0.0;
    for (Eigen::Index a = 0; a < n_rx; ++a)
      for (int p = 0; p < n_layers; ++p)
        for (Eigen::Index s = 0; s + 1 < n_span; ++s) diff += std::norm(raw[a](s + 1, p) - raw[a](s, p));
    // var(difference) = 2 * var(estimate) = sigma^2 / 2; biased up by
    // channel variation across the 6-subcarrier spacing.
    est.noise_var = 2.0 * diff / (static_cast<double>(n_rx * n_layers) * (n_span - 1));
  }

  est.h.assign(n_sc, MatC(n_rx, n_layers));
  for (int p = 0; p < n_layers; ++p) {
    const double x0 = 2.0 * ports[p].cdm_group + 0.5;  // position of span 0
    for (Eigen::Index k = 0; k < n_sc; ++k) {
      const double u = (static_cast<double>(k) - x0) / 6.0;
      Eigen::Index s0;
      double w;
      if (u <= 0.0) {
        s0 = 0;
        w = 0.0;
      } else if (u >= static_cast<double>(n_span - 1)) {
        s0 = n_span - 2 >= 0 ? n_span - 2 : 0;
        w = n_span > 1 ? 1.0 : 0.0;
      } else {
        s0 = static_cast<Eigen::Index>(u);
        w = u - static_cast<double>(s0);
      }
      const Eigen::Index s1 = n_span > 1 ? s0 + 1 : s0;
      for (Eigen::Index a = 0; a < n_rx; ++a)
        est.h[k](a, p) = (1.0 - w) * raw[a](s0, p) + w * raw[a](s1, p);
    }
  }
  return est;
}

}  // namespace fhsim::bbu
