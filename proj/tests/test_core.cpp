// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fhsim/fft.hpp"
#include "fhsim/filtering.hpp"
#include "fhsim/metrics.hpp"
#include "fhsim/resample.hpp"
#include "fhsim/rng.hpp"
#include "fhsim/spectral_resample.hpp"

using namespace fhsim;

namespace {

VecC tone(double freq_hz, double rate_hz, Eigen::Index n, double amp = 1.0) {
  VecC x(n);
  for (Eigen::Index i = 0; i < n; ++i)
    x[i] = amp * std::polar(1.0, 2.0 * kPi * freq_hz * i / rate_hz);
  return x;
}

}  // namespace

TEST_CASE("mix64 matches the splitmix64 reference sequence") {
  // First two outputs of splitmix64 with initial state 0: the generator
  // returns mix64 of each successive multiple of the golden gamma. Vectors
  // computed from the published algorithm.
  CHECK(mix64(0x0000000000000000ULL) == 0x971923C1C1C43483ULL);
  CHECK(mix64(0x9E3779B97F4A7C15ULL) == 0x5151939FE4F4AFDEULL);
  CHECK(derive_seed(1, 2) != derive_seed(2, 1));
}

TEST_CASE("rng streams are reproducible and tag-separated") {
  Rng a(42), b(42), c(derive_seed(42, 7));
  for (int i = 0; i < 1000; ++i) CHECK(a.bits() == b.bits());
  int same = 0;
  Rng a2(42);
  for (int i = 0; i < 64; ++i) same += (a2.bits() == c.bits());
  CHECK(same < 4);
}

TEST_CASE("rng distributions have the right moments") {
  Rng rng(123);
  const int n = 200000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    sum += x;
    sq += x * x;
  }
  CHECK(std::abs(sum / n) < 0.01);
  CHECK(sq / n == doctest::Approx(1.0).epsilon(0.02));

  double p = 0.0;
  for (int i = 0; i < n; ++i) p += std::norm(rng.cnormal());
  CHECK(p / n == doctest::Approx(1.0).epsilon(0.02));

  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("fft conventions: delta, parseval, bin frequencies") {
  FftEngine fft;
  VecC delta = VecC::Zero(64);
  delta[0] = 1.0;
  const VecC flat = fft.fwd(delta);
  CHECK((flat - VecC::Ones(64)).abs().maxCoeff() < 1e-12);

  Rng rng(5);
  const VecC x = rng.cnormal_vec(256);
  const VecC X = fft.fwd(x);
  CHECK(X.abs2().sum() / 256.0 == doctest::Approx(x.abs2().sum()).epsilon(1e-12));
  const VecC back = fft.inv(X);
  CHECK((back - x).abs().maxCoeff() < 1e-12);

  CHECK(fft_bin_freq(0, 8, 800.0) == 0.0);
  CHECK(fft_bin_freq(1, 8, 800.0) == 100.0);
  CHECK(fft_bin_freq(7, 8, 800.0) == -100.0);
}

TEST_CASE("fft_convolve equals direct convolution") {
  Rng rng(9);
  const VecC a = rng.cnormal_vec(37), b = rng.cnormal_vec(12);
  VecC direct = VecC::Zero(a.size() + b.size() - 1);
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = 0; j < b.size(); ++j) direct[i + j] += a[i] * b[j];
  const VecC fast = fft_convolve(a, b);
  CHECK((fast - direct).abs().maxCoeff() < 1e-10);
}

TEST_CASE("resampler reproduces an in-band multitone at the new rate") {
  const double f_in = 122.88e6, f_out = 491.52e6;
  const std::array<double, 3> freqs = {3.1e6, -17.7e6, 40.2e6};
  const Eigen::Index n = 16384;

  VecC x = VecC::Zero(n);
  for (double f : freqs) x += tone(f, f_in, n);
  SincResampler up(f_in, f_out, ResampleSpec{49.14e6, 73.74e6});
  const VecC y = up.apply(x);

  VecC want = VecC::Zero(y.size());
  for (double f : freqs) want += tone(f, f_out, y.size());

  const Eigen::Index margin = 4 * up.taps();
  const VecC got_mid = y.segment(margin, y.size() - 2 * margin);
  const VecC want_mid = want.segment(margin, want.size() - 2 * margin);
  const double err_db = lin_to_db((got_mid - want_mid).abs2().sum() / want_mid.abs2().sum());
  CHECK(err_db < -70.0);
}

TEST_CASE("resampler has unit DC gain and zero phase") {
  SincResampler r(80e9, 491.52e6 * 4.0, ResampleSpec{12.8e9, 15.7e9});
  VecR dc = VecR::Ones(4096);
  const VecR out = r.apply(dc);
  CHECK(out.segment(64, out.size() - 128).maxCoeff() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(out.segment(64, out.size() - 128).minCoeff() == doctest::Approx(1.0).epsilon(1e-6));

  // A tone must come out with zero delay: correlate against the ideal tone.
  const double f_in = 10e6, f_out = 25e6;
  SincResampler r2(f_in, f_out, ResampleSpec{3e6, 5e6});
  const VecC x = tone(1.0e6, f_in, 8192);
  const VecC y = r2.apply(x);
  const VecC ideal = tone(1.0e6, f_out, y.size());
  const cd corr = (ideal.conjugate() * y).sum();
  CHECK(std::abs(std::arg(corr)) < 1e-3);
}

TEST_CASE("resampler downsampling removes out-of-band content") {
  const double f_in = 100e6, f_out = 25e6;
  SincResampler down(f_in, f_out, ResampleSpec{8e6, 12.5e6});
  const VecC in_band = tone(5e6, f_in, 32768);
  const VecC out_band = tone(30e6, f_in, 32768);
  const VecC y_pass = down.apply(in_band);
  const VecC y_stop = down.apply(out_band);
  const Eigen::Index m = 512;
  const double p_pass = y_pass.segment(m, y_pass.size() - 2 * m).abs2().mean();
  const double p_stop = y_stop.segment(m, y_stop.size() - 2 * m).abs2().mean();
  CHECK(lin_to_db(p_stop / p_pass) < -80.0);
}

TEST_CASE("spectral_filter: identity response passes the signal through") {
  Rng rng(11);
  VecC x = rng.cnormal_vec(50000);
  const VecC y = spectral_filter<cd>(x, 1.0, [](double) { return cd(1.0, 0.0); },
                                     Eigen::Index(1) << 14);
  CHECK((y - x).abs().maxCoeff() < 1e-10);
}

TEST_CASE("spectral_filter applies a pure delay exactly") {
  Rng rng(13);
  const Eigen::Index n = 40000;
  VecC x = rng.cnormal_vec(n);
  const double delay = 25.0;  // samples
  const VecC y = spectral_filter<cd>(
      x, 1.0, [&](double f) { return std::polar(1.0, -2.0 * kPi * f * delay); },
      Eigen::Index(1) << 14);
  const VecC got = y.segment(2000, n - 4000);
  const VecC want = x.segment(2000 - 25, n - 4000);
  CHECK((got - want).abs().maxCoeff() < 1e-8);
}

TEST_CASE("freq_shift moves a tone to the expected frequency") {
  const double fs = 100e6;
  VecC x = tone(0.0, fs, 4096);
  freq_shift(x, 12.5e6, fs);
  const VecC want = tone(12.5e6, fs, 4096);
  CHECK((x - want).abs().maxCoeff() < 1e-9);
}

TEST_CASE("lsfit_sinr_db recovers a constructed SINR and ignores scaling") {
  Rng rng(17);
  const Eigen::Index n = 200000;
  const VecC ref = rng.cnormal_vec(n);
  const double snr_db = 14.0;
  const double sigma = std::sqrt(db_to_lin(-snr_db));
  const VecC noisy = ref + sigma * rng.cnormal_vec(n);
  CHECK(lsfit_sinr_db(ref, noisy) == doctest::Approx(snr_db).epsilon(0.03));

  const VecC scaled = cd(0.3, -1.7) * noisy;
  CHECK(lsfit_sinr_db(ref, scaled) == doctest::Approx(lsfit_sinr_db(ref, noisy)).epsilon(1e-6));

  CHECK(lsfit_sinr_db(ref, ref) == doctest::Approx(60.0));
  CHECK(lsfit_sinr_db(ref, ref, 45.0) == doctest::Approx(45.0));
}

TEST_CASE("xcorr_align finds integer delays of either sign") {
  Rng rng(19);
  const Eigen::Index n = 8192;
  const VecC ref = rng.cnormal_vec(n);
  VecC delayed = VecC::Zero(n);
  delayed.tail(n - 37) = ref.head(n - 37);
  CHECK(xcorr_align(ref, delayed, 100) == 37);
  VecC advanced = VecC::Zero(n);
  advanced.head(n - 21) = ref.tail(n - 21);
  CHECK(xcorr_align(ref, advanced, 100) == -21);
}

TEST_CASE("degenerate metric inputs raise errors") {
  const VecC empty_ref = VecC::Zero(16);
  const VecC x = VecC::Ones(16);
  CHECK_THROWS_AS((void)lsfit_sinr_db(empty_ref, x), DegenerateInputError);
  CHECK_THROWS_AS((void)lsfit_sinr_db(x, VecC::Ones(8)), DimensionError);
}

TEST_CASE("spectral retune shifts and resamples exactly on the rate grid") {
  const double r_in = 122.88e6;
  CHECK(rate_block_quantum(r_in, {368.64e6, 337.92e6, 92.16e6}) == 4);
  CHECK(next_smooth(17) == 18);
  CHECK(next_smooth(4096) == 4096);

  const Eigen::Index n = 4096;
  // Tone at a grid frequency: retune to 3x rate with a bin-aligned shift.
  const double f0 = 24.0 * r_in / n;
  const double shift = 96.0 * r_in / n;
  VecC x(n);
  for (Eigen::Index k = 0; k < n; ++k)
    x[k] = std::polar(1.0, 2.0 * kPi * f0 * k / r_in);
  VecC y = spectral_retune(x, r_in, 3.0 * r_in, shift);
  REQUIRE(y.size() == 3 * n);
  double err = 0.0;
  for (Eigen::Index k = 0; k < y.size(); ++k)
    err = std::max(err,
                   std::abs(y[k] - std::polar(1.0, 2.0 * kPi * (f0 + shift) * k / (3.0 * r_in))));
  CHECK(err <= 1e-9);

  // Round trip up/down is the identity, and power is preserved.
  VecC z = Rng(5).cnormal_vec(n);
  VecC up = spectral_retune(z, r_in, 3.0 * r_in, 0.0);
  CHECK(std::abs(up.abs2().mean() - z.abs2().mean()) <= 1e-9 * z.abs2().mean());
  VecC back = spectral_retune(up, 3.0 * r_in, r_in, 0.0);
  CHECK((back - z).cwiseAbs().maxCoeff() <= 1e-10);

  // Identity retune.
  CHECK((spectral_retune(z, r_in, r_in, 0.0) - z).cwiseAbs().maxCoeff() <= 1e-10);

  // Off-grid requests must throw.
  CHECK_THROWS_AS(spectral_retune(z, r_in, 1.5001 * r_in, 0.0), ConfigError);
  CHECK_THROWS_AS(spectral_retune(z, r_in, r_in, 0.37 * r_in / n), ConfigError);
}
