// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <mutex>

#include <unsupported/Eigen/FFT>

#include "fhsim/common.hpp"

namespace fhsim {

/// Reusable DFT engine; plans are cached per size inside the Eigen object,
/// so hot loops should hold one of these rather than re-planning per call.
/// Conventions: fwd is X_k = sum_n x_n e^{-j 2 pi k n / N}, inv includes 1/N.
class FftEngine {
 public:
#ifdef EIGEN_FFTW_DEFAULT
  // FFTW execution is thread-safe but its planner is not; engines are
  // created from worker threads, so serialize planning once per process.
  FftEngine() {
    static std::once_flag planner_guard;
    std::call_once(planner_guard, [] { fftw_make_planner_thread_safe(); });
  }
#endif
  VecC fwd(const VecC& x) {
    Eigen::VectorXcd in = x.matrix(), out(x.size());
    fft_.fwd(out, in);
    return out.array();
  }
  VecC inv(const VecC& x) {
    Eigen::VectorXcd in = x.matrix(), out(x.size());
    fft_.inv(out, in);
    return out.array();
  }
  void fwd_inplace(Eigen::VectorXcd& buf, const Eigen::VectorXcd& in) { fft_.fwd(buf, in); }
  void inv_inplace(Eigen::VectorXcd& buf, const Eigen::VectorXcd& in) { fft_.inv(buf, in); }

 private:
  Eigen::FFT<double> fft_;
};

/// Forward DFT, engineering convention X_k = sum_n x_n e^{-j 2 pi k n / N}.
inline VecC fft_forward(const VecC& x) {
  FftEngine e;
  return e.fwd(x);
}

/// Inverse DFT including the 1/N factor.
inline VecC fft_inverse(const VecC& x) {
  FftEngine e;
  return e.inv(x);
}

/// Frequency of FFT bin k at sample rate fs (negative for the upper half).
inline double fft_bin_freq(Eigen::Index k, Eigen::Index n, double fs) {
  const Eigen::Index signed_k = (k <= n / 2) ? k : k - n;
  return static_cast<double>(signed_k) * fs / static_cast<double>(n);
}

inline Eigen::Index next_pow2(Eigen::Index n) {
  Eigen::Index p = 1;
  while (p < n) p <<= 1;
  return p;
}

/// Linear convolution via zero-padded FFTs; output length na + nb - 1.
inline VecC fft_convolve(const VecC& a, const VecC& b) {
  const Eigen::Index n = a.size() + b.size() - 1;
  const Eigen::Index nfft = next_pow2(n);
  VecC pa = VecC::Zero(nfft), pb = VecC::Zero(nfft);
  pa.head(a.size()) = a;
  pb.head(b.size()) = b;
  VecC prod = fft_forward(pa) * fft_forward(pb);
  return fft_inverse(prod).head(n);
}

}  // namespace fhsim
