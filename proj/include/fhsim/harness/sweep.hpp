// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <cstddef>
#include <string>
#include <thread>
#include <vector>

#include "fhsim/harness/pipeline.hpp"

namespace fhsim::harness {

/// One grid point's outcome; failed points carry the error text instead of
/// a report so a sweep never dies half way.
struct SweepPoint {
  PointSpec spec;
  bool ok = false;
  std::string error;
  bbu::CellReport report;
};

/// Cartesian sweep over the config axes, SNR outermost to drop innermost.
/// Every point is independently seeded and the result slot is fixed by the
/// grid position, so any worker count produces identical output; workers
/// only change wall time.
inline std::vector<SweepPoint> run_sweep(const RunConfig& cfg) {
  cfg.validate();
  std::vector<SweepPoint> pts;
  for (double snr : cfg.sweep.snr_db)
    for (int ues : cfg.sweep.n_ues)
      for (double len : cfg.sweep.length_km)
        for (int d = 0; d < cfg.sweep.n_drops; ++d) {
          SweepPoint p;
          p.spec = PointSpec{snr, ues, len, d, cfg.ideal_fh};
          pts.push_back(std::move(p));
        }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= pts.size()) return;
      try {
        pts[i].report = run_point(cfg, pts[i].spec);
        pts[i].ok = true;
      } catch (const std::exception& e) {
        pts[i].error = e.what();
      }
    }
  };

  const std::size_t n_workers =
      std::min(static_cast<std::size_t>(cfg.n_workers), pts.size());
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(n_workers);
    for (std::size_t i = 0; i < n_workers; ++i) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }
  return pts;
}

}  // namespace fhsim::harness
