// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace fhsim {

template <typename Scalar>
using Vec = Eigen::Array<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using cd = std::complex<double>;
using VecC = Vec<cd>;
using VecR = Vec<double>;
using MatC = Mat<cd>;
using MatR = Mat<double>;
using MaskMat = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

/// Uniformly sampled complex waveform. `center_freq_hz` records where the
/// band sits when the samples are an envelope of a shifted signal (0 for
/// plain baseband). Sample k corresponds to t = k / rate_hz, with t = 0
/// shared across the whole pipeline.
struct IqStream {
  VecC samples;
  double rate_hz = 0.0;
  double center_freq_hz = 0.0;

  Eigen::Index size() const { return samples.size(); }
  double duration_s() const { return static_cast<double>(samples.size()) / rate_hz; }
  double power() const {
    return samples.size() == 0 ? 0.0 : samples.abs2().mean();
  }
};

/// Real-valued sampled waveform (photocurrents, ADC output).
struct RealStream {
  VecR samples;
  double rate_hz = 0.0;

  Eigen::Index size() const { return samples.size(); }
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionError : Error {
  using Error::Error;
};
struct LayerCapacityError : Error {
  using Error::Error;
};
struct DegenerateInputError : Error {
  using Error::Error;
};
struct SyncFailureError : Error {
  using Error::Error;
};
struct ConditioningError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};

inline double db_to_lin(double db) { return std::pow(10.0, db / 10.0); }
inline double lin_to_db(double lin) { return 10.0 * std::log10(lin); }

}  // namespace fhsim
