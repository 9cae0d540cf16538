// SPDX-License-Identifier: Apache-2.0
//
// Generates include/fhsim/bbu/miesm_table.hpp: the 256QAM constrained
// capacity I(snr) over the AWGN channel on a 0.1 dB grid, computed by
// Gauss-Hermite quadrature. Square QAM factors into two independent 16-PAM
// dimensions at the same per-dimension SNR, so the 2-D integral reduces to
// one real dimension. Run once; the output header is committed.

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <vector>

namespace {

// Golub-Welsch: nodes/weights for integral of f(t) exp(-t^2) dt.
void gauss_hermite(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = std::sqrt(k / 2.0);
    j(k, k - 1) = b;
    j(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
  nodes.resize(n);
  weights.resize(n);
  const double sqrt_pi = std::sqrt(M_PI);
  for (int k = 0; k < n; ++k) {
    nodes[k] = es.eigenvalues()[k];
    const double v0 = es.eigenvectors()(0, k);
    weights[k] = sqrt_pi * v0 * v0;
  }
}

// Constrained capacity of unit-total-power 256QAM at snr_lin, in bits/symbol.
double qam256_capacity(double snr_lin, const std::vector<double>& t,
                       const std::vector<double>& w) {
  // 16-PAM levels with per-dimension power 1/2 (total QAM power 1).
  std::vector<double> a(16);
  for (int i = 0; i < 16; ++i) a[i] = (2.0 * i - 15.0) / std::sqrt(170.0);

  const double n0 = 1.0 / snr_lin;
  const double s2 = 0.5 * n0;             // per-dimension noise variance
  const double s = std::sqrt(s2);
  const double inv_sqrt_pi = 1.0 / std::sqrt(M_PI);

  double loss = 0.0;  // E[ log2 sum_j exp(...) ], averaged over symbols
  for (int i = 0; i < 16; ++i) {
    for (std::size_t q = 0; q < t.size(); ++q) {
      const double n = std::sqrt(2.0) * s * t[q];
      double dmax = 0.0;  // the j == i term is exactly 0
      std::vector<double> d(16);
      for (int j = 0; j < 16; ++j) {
        const double delta = a[i] - a[j] + n;
        d[j] = -(delta * delta - n * n) / (2.0 * s2);
        if (d[j] > dmax) dmax = d[j];
      }
      double acc = 0.0;
      for (int j = 0; j < 16; ++j) acc += std::exp(d[j] - dmax);
      loss += w[q] * inv_sqrt_pi * (dmax + std::log(acc)) / std::log(2.0);
    }
  }
  const double i_1d = 4.0 - loss / 16.0;
  return std::max(0.0, 2.0 * i_1d);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <output-header-path>\n", argv[0]);
    return 1;
  }

  constexpr double kMinDb = -20.0;
  constexpr double kStepDb = 0.1;
  constexpr int kCount = 601;  // -20 .. +40 dB

  std::vector<double> nodes, weights;
  gauss_hermite(64, nodes, weights);

  std::vector<double> table(kCount);
  for (int i = 0; i < kCount; ++i) {
    const double db = kMinDb + kStepDb * i;
    table[i] = qam256_capacity(std::pow(10.0, db / 10.0), nodes, weights);
    if (i > 0 && table[i] < table[i - 1]) {
      std::fprintf(stderr, "table not monotone at %d\n", i);
      return 1;
    }
  }

  std::FILE* f = std::fopen(argv[1], "w");
  if (!f) {
    std::perror("fopen");
    return 1;
  }
  std::fprintf(f,
               "// SPDX-License-Identifier: Apache-2.0\n"
               "// Generated by tools/miesm_table_gen.cpp; do not edit.\n"
               "#pragma once\n\n"
               "namespace fhsim::bbu::detail {\n\n"
               "// 256QAM constrained capacity over AWGN, bits/symbol, on a uniform\n"
               "// dB grid. Saturates to 8.0 in double precision above ~32 dB.\n"
               "inline constexpr double kMiTableMinDb = %.1f;\n"
               "inline constexpr double kMiTableStepDb = %.1f;\n"
               "inline constexpr int kMiTableCount = %d;\n"
               "inline constexpr double kMiTableBits[%d] = {\n",
               kMinDb, kStepDb, kCount, kCount);
  for (int i = 0; i < kCount; ++i)
    std::fprintf(f, "    %.16e,\n", table[i]);
  std::fprintf(f, "};\n\n}  // namespace fhsim::bbu::detail\n");
  std::fclose(f);
  return 0;
}
