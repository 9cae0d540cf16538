// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "fhsim/common.hpp"
#include "fhsim/nr/dmrs.hpp"
#include "fhsim/nr/numerology.hpp"
#include "fhsim/nr/qam.hpp"
#include "fhsim/rng.hpp"

namespace fhsim::nr {

/// Frequency-domain slot content for one carrier. One grid per layer plus the
/// shared DMRS bookkeeping needed by the receiver.
struct ResourceGrid {
  std::vector<MatC> layers;   // each n_subcarriers x n_symbols
  MatC dmrs_base;             // n_subcarriers x 2, shared pilot sequence
  MaskMat dmrs_mask;          // true where the element is a pilot (any port)
  Modulation modulation = Modulation::QAM256;
  int n_subcarriers = 0;
  int n_symbols = 0;

  int n_layers() const { return static_cast<int>(layers.size()); }

  /// Data-bearing elements of one layer, column-major over the grid.
  VecC data_symbols(int layer) const {
    const MatC& g = layers.at(layer);
    VecC out(g.size());
    Eigen::Index n = 0;
    for (Eigen::Index t = 0; t < g.cols(); ++t)
      for (Eigen::Index k = 0; k < g.rows(); ++k)
        if (!dmrs_mask(k, t)) out[n++] = g(k, t);
    out.conservativeResize(n);
    return out;
  }
};

/// Builds the transmit grid: front-loaded double-symbol DMRS on symbols 0..1,
/// modulated data everywhere else. Every layer transmits pilots on its own
/// port; elements belonging to other CDM groups are left empty so pilots stay
/// orthogonal even without knowing the co-scheduled layers' channels.
inline ResourceGrid build_grid(const CarrierNumerology& num, int layer_count,
                               std::uint64_t seed,
                               Modulation mod = Modulation::QAM256) {
  if (layer_count < 1) throw ConfigError("build_grid: need at least one layer");
  if (layer_count > DmrsConfig::kMaxPorts)
    throw LayerCapacityError("build_grid: more layers than DMRS ports (12)");
  if (num.n_symbols <= DmrsConfig::kNumSymbols)
    throw ConfigError("build_grid: slot too short for front-loaded pilots");

  const int n_sc = num.n_subcarriers();
  if (n_sc % 6 != 0) throw ConfigError("build_grid: subcarrier count must be a multiple of 6");

  ResourceGrid grid;
  grid.modulation = mod;
  grid.n_subcarriers = n_sc;
  grid.n_symbols = num.n_symbols;
  grid.dmrs_base = dmrs_base_sequence(n_sc, derive_seed(seed, 0xd3u));
  grid.dmrs_mask = MaskMat::Zero(n_sc, num.n_symbols);
  grid.dmrs_mask.leftCols(DmrsConfig::kNumSymbols).setConstant(true);

  const VecC constel = constellation(mod);
  for (int p = 0; p < layer_count; ++p) {
    Rng data_rng(derive_seed(seed, 0x100u + static_cast<std::uint64_t>(p)));
    MatC g = MatC::Zero(n_sc, num.n_symbols);

    const DmrsPort port = DmrsConfig::port(p);
    const auto comb = DmrsConfig::comb_offsets(port.cdm_group);
    for (int base_k = 0; base_k < n_sc; base_k += 6)
      for (int kp = 0; kp < 2; ++kp) {
        const int k = base_k + comb[kp];
        for (int t = 0; t < DmrsConfig::kNumSymbols; ++t)
          g(k, t) = static_cast<double>(port.wf[kp] * port.wt[t]) * grid.dmrs_base(k, t);
      }

    for (int t = DmrsConfig::kNumSymbols; t < num.n_symbols; ++t)
      for (int k = 0; k < n_sc; ++k)
        g(k, t) = constel[static_cast<Eigen::Index>(data_rng.index(constel.size()))];

    grid.layers.push_back(std::move(g));
  }
  return grid;
}

}  // namespace fhsim::nr
