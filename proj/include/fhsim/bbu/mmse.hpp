// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <vector>

#include "fhsim/bbu/channel_estimate.hpp"
#include "fhsim/common.hpp"

namespace fhsim::bbu {

struct MmseResult {
  std::vector<MatC> xhat;  // per subcarrier: n_layers x n_symbols
  MatR post_sinr;          // n_subcarriers x n_layers, linear scale
};

/// Per-subcarrier MMSE: W = (H^H H + sigma^2 I)^-1 H^H applied to the
/// received symbols, with the matrix post-equalization SINR
/// SINR_k = 1 / [ (H^H H / sigma^2 + I)^-1 ]_kk - 1, evaluated from the same
/// factorization since (H^H H / sigma^2 + I)^-1 = sigma^2 (H^H H + sigma^2 I)^-1.
inline MmseResult mmse_equalize(const std::vector<MatC>& y, const ChannelEstimate& est) {
  const Eigen::Index n_sc = est.n_subcarriers();
  if (n_sc == 0 || static_cast<Eigen::Index>(y.size()) != n_sc)
    throw DimensionError("mmse_equalize: subcarrier counts disagree");
  if (est.noise_var <= 0.0)
    throw ConditioningError("mmse_equalize: noise variance must be positive");
  const Eigen::Index n_rx = est.n_rx();
  const Eigen::Index n_l = est.n_layers();

  MmseResult out;
  out.xhat.resize(n_sc);
  out.post_sinr.resize(n_sc, n_l);
  const MatC eye = MatC::Identity(n_l, n_l);
  for (Eigen::Index k = 0; k < n_sc; ++k) {
    const MatC& h = est.h[k];
    if (h.rows() != n_rx || h.cols() != n_l)
      throw DimensionError("mmse_equalize: channel estimate shape varies across subcarriers");
    if (y[k].rows() != n_rx)
      throw DimensionError("mmse_equalize: received symbol dimension mismatch");
    const MatC a = h.adjoint() * h + est.noise_var * eye;
    const Eigen::LDLT<MatC> ldlt(a);
    if (ldlt.info() != Eigen::Success)
      throw ConditioningError("mmse_equalize: regularized Gram matrix not factorizable");
    const MatC ainv = ldlt.solve(eye);
    out.xhat[k] = ldlt.solve(h.adjoint() * y[k]);
    for (Eigen::Index l = 0; l < n_l; ++l) {
      const double mse = est.noise_var * ainv(l, l).real();
      if (!(mse > 0.0) || !std::isfinite(mse))
        throw ConditioningError("mmse_equalize: ill-conditioned subcarrier");
      out.post_sinr(k, l) = 1.0 / mse - 1.0;
    }
  }
  return out;
}

}  // namespace fhsim::bbu
