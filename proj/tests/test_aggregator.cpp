// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <vector>

#include "doctest.h"
#include "fhsim/fronthaul/aggregator.hpp"
#include "fhsim/fronthaul/capture_io.hpp"
#include "fhsim/rng.hpp"

using namespace fhsim;
using namespace fhsim::fronthaul;

namespace {

std::vector<IqStream> random_streams(int n_ch, Eigen::Index len, double rate,
                                     std::uint64_t seed) {
  std::vector<IqStream> s(n_ch);
  for (int i = 0; i < n_ch; ++i) {
    s[i].samples = Rng(derive_seed(seed, i)).cnormal_vec(len);
    s[i].rate_hz = rate;
  }
  return s;
}

AggregationPlan plan_for(int n_ch, double rate = 491.52e6) {
  AggregationPlan p;
  p.n_channels = n_ch;
  p.per_channel_rate_hz = rate;
  return p;
}

}  // namespace

TEST_CASE("aggregate interleaves round-robin and deaggregate inverts bit-exactly") {
  for (int n_ch : {1, 2, 8, 64}) {
    auto plan = plan_for(n_ch);
    auto streams = random_streams(n_ch, 50, plan.per_channel_rate_hz, 1000 + n_ch);
    IqStream comp = aggregate(streams, plan);
    CHECK(comp.size() == 50 * n_ch);
    CHECK(comp.rate_hz == doctest::Approx(n_ch * 491.52e6));
    auto back = deaggregate(comp, plan);
    REQUIRE(static_cast<int>(back.size()) == n_ch);
    for (int i = 0; i < n_ch; ++i) {
      REQUIRE(back[i].size() == 50);
      for (Eigen::Index k = 0; k < 50; ++k) {
        CHECK(back[i].samples[k].real() == streams[i].samples[k].real());
        CHECK(back[i].samples[k].imag() == streams[i].samples[k].imag());
      }
    }
  }
}

TEST_CASE("two-channel interleave order matches the definition") {
  auto plan = plan_for(2);
  std::vector<IqStream> s(2);
  s[0].samples = VecC(2);
  s[0].samples << cd(1, 0), cd(2, 0);
  s[1].samples = VecC(2);
  s[1].samples << cd(10, 0), cd(20, 0);
  s[0].rate_hz = s[1].rate_hz = plan.per_channel_rate_hz;
  IqStream comp = aggregate(s, plan);
  CHECK(comp.samples[0] == cd(1, 0));
  CHECK(comp.samples[1] == cd(10, 0));
  CHECK(comp.samples[2] == cd(2, 0));
  CHECK(comp.samples[3] == cd(20, 0));
}

TEST_CASE("single channel aggregation is the identity") {
  auto plan = plan_for(1);
  auto streams = random_streams(1, 33, plan.per_channel_rate_hz, 5);
  IqStream comp = aggregate(streams, plan);
  CHECK((comp.samples - streams[0].samples).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("one composite-sample delay rotates channel contents") {
  const int n_ch = 8;
  auto plan = plan_for(n_ch);
  auto streams = random_streams(n_ch, 40, plan.per_channel_rate_hz, 7);
  IqStream comp = aggregate(streams, plan);
  IqStream delayed;
  delayed.rate_hz = comp.rate_hz;
  delayed.samples = VecC::Zero(comp.size());
  delayed.samples.tail(comp.size() - 1) = comp.samples.head(comp.size() - 1);
  auto back = deaggregate(delayed, plan);
  for (int i = 1; i < n_ch; ++i)
    CHECK((back[i].samples - streams[i - 1].samples).cwiseAbs().maxCoeff() == 0.0);
  // Channel 0 gets the previous sample of the last channel.
  CHECK(back[0].samples[0] == cd(0, 0));
  CHECK((back[0].samples.tail(39) - streams[n_ch - 1].samples.head(39)).cwiseAbs().maxCoeff() ==
        0.0);
}

TEST_CASE("deaggregation is linear") {
  const int n_ch = 4;
  auto plan = plan_for(n_ch);
  auto sa = random_streams(n_ch, 25, plan.per_channel_rate_hz, 11);
  auto sb = random_streams(n_ch, 25, plan.per_channel_rate_hz, 13);
  IqStream ca = aggregate(sa, plan), cb = aggregate(sb, plan);
  IqStream sum;
  sum.rate_hz = ca.rate_hz;
  sum.samples = ca.samples + 2.0 * cb.samples;
  auto da = deaggregate(ca, plan), db = deaggregate(cb, plan), ds = deaggregate(sum, plan);
  for (int i = 0; i < n_ch; ++i)
    CHECK((ds[i].samples - (da[i].samples + 2.0 * db[i].samples)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("an LTI filter on the composite is a polyphase MIMO filter on the channels") {
  const int n_ch = 4;
  const Eigen::Index len = 32;
  auto plan = plan_for(n_ch);
  auto streams = random_streams(n_ch, len, plan.per_channel_rate_hz, 17);
  IqStream comp = aggregate(streams, plan);

  VecC h = Rng(99).cnormal_vec(7);
  IqStream filtered;
  filtered.rate_hz = comp.rate_hz;
  filtered.samples = VecC::Zero(comp.size());
  for (Eigen::Index m = 0; m < comp.size(); ++m)
    for (Eigen::Index t = 0; t < h.size(); ++t)
      if (m - t >= 0) filtered.samples[m] += h[t] * comp.samples[m - t];
  auto got = deaggregate(filtered, plan);

  // Polyphase map: output channel i at sample k picks up h[i - j + q*N]
  // from input channel j at sample k - q.
  for (int i = 0; i < n_ch; ++i) {
    VecC want = VecC::Zero(len);
    for (Eigen::Index k = 0; k < len; ++k)
      for (int j = 0; j < n_ch; ++j)
        for (Eigen::Index q = 0; q * n_ch <= h.size() + n_ch; ++q) {
          const Eigen::Index tap = i - j + q * n_ch;
          if (tap < 0 || tap >= h.size() || k - q < 0) continue;
          want[k] += h[tap] * streams[j].samples[k - q];
        }
    CHECK((want - got[i].samples).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("aggregate validates shapes and rates") {
  auto plan = plan_for(4);
  auto streams = random_streams(4, 10, plan.per_channel_rate_hz, 19);
  streams[2].samples.conservativeResize(9);
  CHECK_THROWS_AS(aggregate(streams, plan), DimensionError);
  streams = random_streams(3, 10, plan.per_channel_rate_hz, 19);
  CHECK_THROWS_AS(aggregate(streams, plan), DimensionError);
  streams = random_streams(4, 10, 1e6, 19);
  CHECK_THROWS_AS(aggregate(streams, plan), ConfigError);
  IqStream odd;
  odd.samples = VecC::Zero(10);
  odd.rate_hz = plan.composite_rate_hz();
  CHECK_THROWS_AS(deaggregate(odd, plan), DimensionError);
}

TEST_CASE("capture files round-trip byte-exactly at float precision") {
  auto plan = plan_for(8);
  auto streams = random_streams(8, 64, plan.per_channel_rate_hz, 23);
  IqStream comp = aggregate(streams, plan);
  const std::string path = "capture_test.bin";
  write_capture(path, comp, 8);

  auto info = read_capture(path);
  CHECK(info.version == kCaptureVersion);
  CHECK(info.n_channels == 8);
  CHECK(info.stream.rate_hz == comp.rate_hz);
  REQUIRE(info.stream.size() == comp.size());
  for (Eigen::Index k = 0; k < comp.size(); ++k) {
    CHECK(info.stream.samples[k].real() == static_cast<float>(comp.samples[k].real()));
    CHECK(info.stream.samples[k].imag() == static_cast<float>(comp.samples[k].imag()));
  }

  // Re-writing the identical stream must produce identical bytes.
  const std::string path2 = "capture_test2.bin";
  write_capture(path2, comp, 8);
  std::ifstream f1(path, std::ios::binary), f2(path2, std::ios::binary);
  std::string b1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
  std::string b2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
  CHECK(b1.size() == 32 + 8 * static_cast<size_t>(comp.size()));
  CHECK(b1 == b2);
  std::remove(path.c_str());
  std::remove(path2.c_str());
}
