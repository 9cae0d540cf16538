// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>

#include "fhsim/common.hpp"

namespace fhsim::fronthaul {

/// Raw composite capture: 32-byte header followed by interleaved I/Q pairs
/// as little-endian IEEE-754 binary32. Header layout (all little-endian):
///   bytes  0-7   magic "FHSIMCAP"
///   bytes  8-11  version (uint32, currently 1)
///   bytes 12-15  n_channels (uint32)
///   bytes 16-23  sample rate in Hz (float64)
///   bytes 24-31  reserved, zero
struct CaptureInfo {
  IqStream stream;
  std::uint32_t n_channels = 0;
  std::uint32_t version = 0;
};

inline constexpr char kCaptureMagic[8] = {'F', 'H', 'S', 'I', 'M', 'C', 'A', 'P'};
inline constexpr std::uint32_t kCaptureVersion = 1;

namespace detail {

static_assert(std::endian::native == std::endian::little,
              "capture format assumes a little-endian host");

template <typename T>
void put(std::string& buf, T v) {
  char raw[sizeof(T)];
  std::memcpy(raw, &v, sizeof(T));
  buf.append(raw, sizeof(T));
}

template <typename T>
T get(const char* p) {
  T v;
  std::memcpy(&v, p, sizeof(T));
  return v;
}

}  // namespace detail

inline void write_capture(const std::string& path, const IqStream& stream,
                          std::uint32_t n_channels) {
  std::string buf;
  buf.reserve(32 + 8 * static_cast<size_t>(stream.size()));
  buf.append(kCaptureMagic, 8);
  detail::put(buf, kCaptureVersion);
  detail::put(buf, n_channels);
  detail::put(buf, stream.rate_hz);
  buf.append(8, '\0');
  for (Eigen::Index k = 0; k < stream.size(); ++k) {
    detail::put(buf, static_cast<float>(stream.samples[k].real()));
    detail::put(buf, static_cast<float>(stream.samples[k].imag()));
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("capture: cannot open " + path + " for writing");
  f.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!f) throw Error("capture: short write to " + path);
}

inline CaptureInfo read_capture(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("capture: cannot open " + path);
  std::string buf((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  if (buf.size() < 32 || std::memcmp(buf.data(), kCaptureMagic, 8) != 0)
    throw Error("capture: bad header in " + path);
  CaptureInfo info;
  info.version = detail::get<std::uint32_t>(buf.data() + 8);
  info.n_channels = detail::get<std::uint32_t>(buf.data() + 12);
  info.stream.rate_hz = detail::get<double>(buf.data() + 16);
  const size_t payload = buf.size() - 32;
  if (payload % 8 != 0) throw Error("capture: truncated sample payload in " + path);
  const Eigen::Index n = static_cast<Eigen::Index>(payload / 8);
  info.stream.samples.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const char* p = buf.data() + 32 + 8 * k;
    info.stream.samples[k] = cd(detail::get<float>(p), detail::get<float>(p + 4));
  }
  return info;
}

}  // namespace fhsim::fronthaul
