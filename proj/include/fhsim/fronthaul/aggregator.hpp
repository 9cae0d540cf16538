// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "fhsim/common.hpp"

namespace fhsim::fronthaul {

/// Round-robin TDMA multiplexing of N antenna streams onto one composite
/// stream at N times the channel rate. No guard samples or sync words are
/// inserted; alignment travels as side information.
struct AggregationPlan {
  int n_channels = 64;
  double per_channel_rate_hz = 491.52e6;

  double composite_rate_hz() const { return n_channels * per_channel_rate_hz; }

  void validate() const {
    if (n_channels < 1) throw ConfigError("aggregation: n_channels must be >= 1");
    if (per_channel_rate_hz <= 0.0)
      throw ConfigError("aggregation: per_channel_rate_hz must be positive");
  }
};

/// output[k*N + i] = streams[i][k]. Pure sample copy, bit-exact.
inline IqStream aggregate(const std::vector<IqStream>& streams, const AggregationPlan& plan) {
  plan.validate();
  if (static_cast<int>(streams.size()) != plan.n_channels)
    throw DimensionError("aggregate: expected " + std::to_string(plan.n_channels) +
                         " streams, got " + std::to_string(streams.size()));
  const Eigen::Index n = streams[0].size();
  for (const auto& s : streams) {
    if (s.size() != n) throw DimensionError("aggregate: unequal stream lengths");
    if (std::abs(s.rate_hz - plan.per_channel_rate_hz) > 1e-3 * plan.per_channel_rate_hz)
      throw ConfigError("aggregate: stream rate does not match plan");
  }
  IqStream out;
  out.rate_hz = plan.composite_rate_hz();
  out.samples.resize(n * plan.n_channels);
  for (int i = 0; i < plan.n_channels; ++i)
    for (Eigen::Index k = 0; k < n; ++k) out.samples[k * plan.n_channels + i] = streams[i].samples[k];
  return out;
}

/// Exact inverse of aggregate.
inline std::vector<IqStream> deaggregate(const IqStream& stream, const AggregationPlan& plan) {
  plan.validate();
  if (stream.size() % plan.n_channels != 0)
    throw DimensionError("deaggregate: length not divisible by n_channels");
  const Eigen::Index n = stream.size() / plan.n_channels;
  std::vector<IqStream> out(plan.n_channels);
  for (int i = 0; i < plan.n_channels; ++i) {
    out[i].rate_hz = plan.per_channel_rate_hz;
    out[i].center_freq_hz = stream.center_freq_hz;
    out[i].samples.resize(n);
    for (Eigen::Index k = 0; k < n; ++k) out[i].samples[k] = stream.samples[k * plan.n_channels + i];
  }
  return out;
}

}  // namespace fhsim::fronthaul
