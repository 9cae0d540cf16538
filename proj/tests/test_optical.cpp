// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "fhsim/filtering.hpp"
#include "fhsim/optical/fiber_link.hpp"
#include "fhsim/optical/kk_receiver.hpp"
#include "fhsim/rng.hpp"

using namespace fhsim;
using namespace fhsim::optical;

namespace {

constexpr double kRate = 122.88e6;  // composite rate for these tests

FiberLinkConfig tiny_cfg() {
  FiberLinkConfig cfg;
  cfg.if_hz = 92.16e6;       // 0.75x composite rate
  cfg.dac_rate_hz = 368.64e6;  // 3x
  cfg.adc_rate_hz = 337.92e6;  // 2.75x
  cfg.adc_bits = 0;
  return cfg;
}

IqStream make_composite(Eigen::Index n, std::uint64_t seed) {
  IqStream s;
  s.samples = Rng(seed).cnormal_vec(n);
  s.rate_hz = kRate;
  return s;
}

double measured_cspr_db(const OpticalField& f) {
  const cd carrier = f.field.samples.mean();
  const double p_c = std::norm(carrier);
  const double p_s = (f.field.samples - carrier).abs2().mean();
  return lin_to_db(p_c / p_s);
}

double kk_chain_snr_db(const IqStream& composite, const FiberLinkConfig& cfg,
                       const KkConfig& kk) {
  OpticalField tx = ssb_modulate(composite, cfg);
  OpticalField rx = fiber_propagate(tx, cfg);
  Photocurrent pd = photodetect(rx, cfg, 1);
  KkResult rec = kk_reconstruct(pd.stream, kk);
  IqStream truth;
  truth.samples = spectral_retune(rx.field.samples, cfg.dac_rate_hz, cfg.adc_rate_hz, 0.0);
  truth.rate_hz = cfg.adc_rate_hz;
  return lsfit_sinr_db(truth.samples, rec.field.samples);
}

}  // namespace

TEST_CASE("ssb_modulate hits the configured CSPR and stays single-sideband") {
  auto cfg = tiny_cfg();
  IqStream comp = make_composite(16384, 3);
  OpticalField f = ssb_modulate(comp, cfg);
  CHECK(f.field.rate_hz == cfg.dac_rate_hz);
  CHECK(std::abs(measured_cspr_db(f) - cfg.cspr_db) <= 0.1);

  // Signal support must be [if - r/2, if + r/2]; the brick retune makes the
  // out-of-band bins exact zeros up to FFT roundoff.
  VecC spec = fft_forward(VecC(f.field.samples - cd(f.carrier_amp, 0.0)));
  const Eigen::Index n = spec.size();
  double inband = 0.0, outband = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double fr = fft_bin_freq(k, n, cfg.dac_rate_hz);
    const bool in = fr >= cfg.if_hz - kRate / 2 - 1.0 && fr <= cfg.if_hz + kRate / 2 + 1.0;
    (in ? inband : outband) += std::norm(spec[k]);
  }
  CHECK(outband <= 1e-12 * inband);
  CHECK(inband > 0.0);
}

TEST_CASE("ssb_modulate of silence is a pure unit carrier") {
  auto cfg = tiny_cfg();
  IqStream comp;
  comp.samples = VecC::Zero(4096);
  comp.rate_hz = kRate;
  OpticalField f = ssb_modulate(comp, cfg);
  CHECK(f.carrier_amp == 1.0);
  CHECK((f.field.samples - cd(1.0, 0.0)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("ssb_modulate rejects an IF too close to DAC Nyquist") {
  auto cfg = tiny_cfg();
  cfg.if_hz = cfg.dac_rate_hz / 2.0 - kRate / 4.0;
  CHECK_THROWS_AS(ssb_modulate(make_composite(4096, 5), cfg), ConfigError);
}

TEST_CASE("fiber propagation is all-pass, unitary and additive in length") {
  auto cfg = tiny_cfg();
  OpticalField f = ssb_modulate(make_composite(8192, 7), cfg);

  cfg.length_km = 0.0;
  OpticalField same = fiber_propagate(f, cfg);
  CHECK((same.field.samples - f.field.samples).cwiseAbs().maxCoeff() == 0.0);

  cfg.dispersion_ps_nm_km = 1.7e5;  // exaggerated so CD matters at these rates
  cfg.length_km = 40.0;
  OpticalField out = fiber_propagate(f, cfg);
  CHECK(std::abs(out.field.samples.abs2().sum() - f.field.samples.abs2().sum()) <=
        1e-10 * f.field.samples.abs2().sum());

  cfg.length_km = 20.0;
  OpticalField half = fiber_propagate(f, cfg);
  OpticalField twice = fiber_propagate(half, cfg);
  CHECK((twice.field.samples - out.field.samples).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("photodetection squares the field and keeps only beat lines") {
  auto cfg = tiny_cfg();
  const Eigen::Index n = 49152;  // grid-valid at dac rate

  OpticalField constant;
  constant.field.samples = VecC::Constant(n, cd(2.0, 0.0));
  constant.field.rate_hz = cfg.dac_rate_hz;
  Photocurrent pd = photodetect(constant, cfg, 1);
  CHECK(pd.stream.rate_hz == cfg.adc_rate_hz);
  CHECK((pd.stream.samples - 4.0).cwiseAbs().maxCoeff() <= 1e-10);
  CHECK(pd.clip_count == 0);

  // Carrier plus one tone: spectrum should hold DC and the +-f0 beats only
  // (a second-harmonic line would also be admissible for a two-tone field).
  const double f0 = cfg.dac_rate_hz / 12.0;
  OpticalField two;
  two.field.samples = VecC::Constant(n, cd(2.0, 0.0));
  two.field.rate_hz = cfg.dac_rate_hz;
  for (Eigen::Index k = 0; k < n; ++k)
    two.field.samples[k] += 0.5 * std::polar(1.0, 2.0 * kPi * f0 * k / cfg.dac_rate_hz);
  Photocurrent pd2 = photodetect(two, cfg, 1);
  VecC spec = fft_forward(pd2.stream.samples.cast<cd>());
  const Eigen::Index m = spec.size();
  const Eigen::Index k0 = static_cast<Eigen::Index>(std::llround(f0 * m / cfg.adc_rate_hz));
  double allowed = 0.0, rest = 0.0;
  for (Eigen::Index k = 0; k < m; ++k) {
    const Eigen::Index s = k <= m / 2 ? k : k - m;
    if (s == 0 || std::abs(s) == k0 || std::abs(s) == 2 * k0)
      allowed += std::norm(spec[k]);
    else
      rest += std::norm(spec[k]);
  }
  CHECK(rest <= 1e-12 * allowed);
}

TEST_CASE("8-bit quantization clips rarely and adds bounded error") {
  auto cfg = tiny_cfg();
  IqStream comp = make_composite(32768, 11);
  OpticalField f = ssb_modulate(comp, cfg);
  Photocurrent clean = photodetect(f, cfg, 1);
  cfg.adc_bits = 8;
  Photocurrent quant = photodetect(f, cfg, 1);
  // The photocurrent fluctuation is 2A Re(s) + (|s|^2 - P_s); the
  // signal-signal term has an exponential upper tail, so the +-4 sigma span
  // clips around 1e-3 of the samples rather than the Gaussian 6e-5.
  CHECK(quant.clip_fraction < 2e-3);
  CHECK(quant.clip_count > 0);

  const double sigma = std::sqrt((clean.stream.samples - clean.stream.samples.mean()).abs2().mean());
  const double step = 8.0 * sigma / 256.0;
  const double err = (quant.stream.samples - clean.stream.samples).abs2().mean();
  CHECK(err <= step * step);        // mid-rise error is step^2/12 plus rare clips
  CHECK(err >= step * step / 100.0);  // and it is not silently disabled
}

TEST_CASE("KK reconstruction recovers a minimum-phase SSB field") {
  auto cfg = tiny_cfg();
  KkConfig kk;
  const double snr = kk_chain_snr_db(make_composite(16384, 13), cfg, kk);
  CHECK(snr >= 30.0);
}

TEST_CASE("KK reconstruction of a pure carrier is near exact") {
  KkConfig kk;
  RealStream flat;
  flat.samples = VecR::Constant(12288, 4.0);
  flat.rate_hz = 337.92e6;
  KkResult rec = kk_reconstruct(flat, kk);
  CHECK(rec.clamp_count == 0);
  CHECK((rec.field.samples - cd(2.0, 0.0)).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("KK reconstruction improves monotonically with CSPR") {
  auto cfg = tiny_cfg();
  KkConfig kk;
  IqStream comp = make_composite(8192, 17);
  double prev = -1e9;
  for (double cspr = 0.0; cspr <= 14.0; cspr += 2.0) {
    cfg.cspr_db = cspr;
    const double snr = kk_chain_snr_db(comp, cfg, kk);
    CHECK(snr >= prev - 0.1);
    prev = snr;
  }
}

TEST_CASE("KK clamps and counts negative photocurrent samples") {
  KkConfig kk;
  RealStream bad;
  bad.samples = VecR::Constant(8192, 4.0);
  bad.samples[100] = -1.0;
  bad.samples[200] = -0.5;
  bad.rate_hz = 337.92e6;
  KkResult rec = kk_reconstruct(bad, kk);
  CHECK(rec.clamp_count == 2);

  RealStream zero;
  zero.samples = VecR::Zero(1024);
  zero.rate_hz = 337.92e6;
  CHECK_THROWS_AS(kk_reconstruct(zero, kk), DegenerateInputError);
}

TEST_CASE("carrier removal and downconversion invert the SSB modulator") {
  auto cfg = tiny_cfg();
  IqStream comp = make_composite(16384, 19);
  OpticalField f = ssb_modulate(comp, cfg);

  // Directly on the clean field the inversion is exact up to the carrier
  // estimate; the residual carrier line falls outside the composite band.
  IqStream back = carrier_remove_downconvert(f.field, cfg.if_hz, kRate);
  REQUIRE(back.size() == comp.size());
  CHECK(lsfit_sinr_db(comp.samples, back.samples) >= 60.0);

  // Carrier-only input: output residual far below the carrier power.
  IqStream silent;
  silent.samples = VecC::Zero(16384);
  silent.rate_hz = kRate;
  OpticalField carrier_only = ssb_modulate(silent, cfg);
  IqStream resid = carrier_remove_downconvert(carrier_only.field, cfg.if_hz, kRate);
  CHECK(resid.power() <= db_to_lin(-50.0) * carrier_only.carrier_amp * carrier_only.carrier_amp);
}

TEST_CASE("end-to-end optical chain at L=0 recovers the composite") {
  auto cfg = tiny_cfg();
  KkConfig kk;
  IqStream comp = make_composite(16384, 23);
  OpticalField tx = ssb_modulate(comp, cfg);
  Photocurrent pd = photodetect(tx, cfg, 1);
  KkResult rec = kk_reconstruct(pd.stream, kk);
  IqStream back = carrier_remove_downconvert(rec.field, cfg.if_hz, kRate);
  CHECK(pre_mimo_sinr(back, comp) >= 35.0);
}

TEST_CASE("dispersion through the chain equals the baseband CD filter") {
  auto cfg = tiny_cfg();
  cfg.dispersion_ps_nm_km = 1.7e5;
  cfg.length_km = 40.0;
  KkConfig kk;
  IqStream comp = make_composite(16384, 29);
  OpticalField tx = ssb_modulate(comp, cfg);
  OpticalField prop = fiber_propagate(tx, cfg);
  Photocurrent pd = photodetect(prop, cfg, 1);
  KkResult rec = kk_reconstruct(pd.stream, kk);
  IqStream back = carrier_remove_downconvert(rec.field, cfg.if_hz, kRate);

  const double coef = kPi * cfg.dispersion_ps_nm_km * 1e-6 * (cfg.wavelength_nm * 1e-9) *
                      (cfg.wavelength_nm * 1e-9) * cfg.length_km * 1e3 / kSpeedOfLight;
  IqStream want;
  want.rate_hz = kRate;
  want.samples = spectral_filter<cd>(
      comp.samples, kRate,
      [&](double fr) {
        const double fo = fr + cfg.if_hz;
        return std::polar(1.0, coef * fo * fo);
      },
      1 << 16);
  CHECK(pre_mimo_sinr(back, want) >= 30.0);
}

TEST_CASE("8-bit quantization floor stays clear of the wireless operating range") {
  auto cfg = tiny_cfg();
  KkConfig kk;
  IqStream comp = make_composite(16384, 31);
  OpticalField tx = ssb_modulate(comp, cfg);

  auto run = [&](int bits) {
    FiberLinkConfig c = cfg;
    c.adc_bits = bits;
    Photocurrent pd = photodetect(tx, c, 1);
    KkResult rec = kk_reconstruct(pd.stream, kk);
    IqStream back = carrier_remove_downconvert(rec.field, c.if_hz, kRate);
    return pre_mimo_sinr(back, comp);
  };
  const double clean = run(0), quant = run(8);
  // Quantization sets an error floor (step noise plus rare clips) well below
  // the unquantized chain; what matters is that the floor stays far above the
  // receive SNRs the link carries, so it costs <1 dB where noise dominates.
  CHECK(clean >= 45.0);
  CHECK(quant >= 35.0);
  CHECK(quant <= clean);
}

TEST_CASE("pre_mimo_sinr aligns, fits and caps") {
  IqStream ref = make_composite(32768, 37);
  CHECK(pre_mimo_sinr(ref, ref) == doctest::Approx(60.0));

  IqStream noisy = ref;
  noisy.samples += Rng(41).cnormal_vec(ref.size());
  CHECK(std::abs(pre_mimo_sinr(noisy, ref)) <= 0.1);

  IqStream delayed;
  delayed.rate_hz = ref.rate_hz;
  delayed.samples = VecC::Zero(ref.size());
  delayed.samples.tail(ref.size() - 37) = cd(0.0, 0.7) * ref.samples.head(ref.size() - 37);
  CHECK(pre_mimo_sinr(delayed, ref) >= 25.0);

  IqStream silent;
  silent.samples = VecC::Zero(128);
  silent.rate_hz = ref.rate_hz;
  CHECK_THROWS_AS(pre_mimo_sinr(ref, silent), DegenerateInputError);
}

TEST_CASE("spectrum dump writes ordered CSV rows") {
  auto cfg = tiny_cfg();
  OpticalField f = ssb_modulate(make_composite(16384, 43), cfg);
  const std::string path = "spectrum_test.csv";
  spectrum_csv(f.field, path, 1024);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "freq_hz,power_db");
  double prev = -1e18;
  Eigen::Index rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    const double fr = std::stod(line.substr(0, line.find(',')));
    CHECK(fr > prev);
    prev = fr;
    ++rows;
  }
  CHECK(rows == 1024);
  std::remove(path.c_str());
}
