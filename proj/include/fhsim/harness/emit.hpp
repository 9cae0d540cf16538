// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "fhsim/harness/sweep.hpp"

namespace fhsim::harness {

inline constexpr char kCsvVersion[] = "fhsim-csv-v1";

namespace detail {

inline std::string num(const char* f, double v) {
  char b[64];
  std::snprintf(b, sizeof b, f, v);
  return b;
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string one_line(std::string s) {
  for (char& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

}  // namespace detail

/// Serializes a sweep to the versioned CSV schema: one row per (point, UE)
/// plus a cell-aggregate row with ue_id = -1 carrying the cell rate and the
/// fronthaul pre-MIMO SINR. Failed points become '# point-failed' comment
/// lines so the grid stays accounted for. Pure function of its inputs, so
/// re-emitting the same sweep is byte-identical.
inline std::string to_csv(const RunConfig& cfg, const std::vector<SweepPoint>& pts) {
  std::string out;
  out += std::string("# ") + kCsvVersion + "\n";
  char prov[160];
  std::snprintf(prov, sizeof prov, "# profile=%s seed=%llu config_fnv1a=%016llx\n",
                cfg.name.c_str(), static_cast<unsigned long long>(cfg.seed),
                static_cast<unsigned long long>(detail::fnv1a(cfg.raw_json)));
  out += prov;
  out +=
      "snr_db,n_ues,length_km,drop,ue_id,eff_sinr_db,se_bits,rate_bps,"
      "cell_rate_bps,pre_mimo_sinr_db,ideal_fh_flag,seed\n";

  for (const SweepPoint& p : pts) {
    const std::string prefix = detail::num("%.3f", p.spec.snr_db) + "," +
                               std::to_string(p.spec.n_ues) + "," +
                               detail::num("%.3f", p.spec.length_km) + "," +
                               std::to_string(p.spec.drop);
    if (!p.ok) {
      out += "# point-failed " + prefix + " error=" + detail::one_line(p.error) + "\n";
      continue;
    }
    const std::string suffix = std::string(p.report.ideal_fh ? "1" : "0") + "," +
                               std::to_string(p.report.seed);
    for (const bbu::UeReport& u : p.report.ues)
      out += prefix + "," + std::to_string(u.ue_id) + "," +
             detail::num("%.6f", u.eff_sinr_db) + "," + detail::num("%.9f", u.se_bits) +
             "," + detail::num("%.3f", u.rate_bps) + ",,," + suffix + "\n";
    out += prefix + ",-1,,,," + detail::num("%.3f", p.report.cell_rate_bps) + "," +
           detail::num("%.6f", p.report.pre_mimo_sinr_db) + "," + suffix + "\n";
  }
  return out;
}

struct Series {
  std::string label;
  std::vector<double> x, y;
  bool open_markers = false;
};

/// Minimal self-contained SVG line plot; fixed geometry and formatting keep
/// the output byte-deterministic for identical data.
inline std::string svg_line_plot(const std::string& title, const std::string& xlabel,
                                 const std::string& ylabel,
                                 const std::vector<Series>& series) {
  static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  const double w = 760, h = 480, l = 72, r = 190, t = 48, b = 56;
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  bool any = false;
  for (const Series& s : series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      if (!any) {
        xmin = xmax = s.x[i];
        ymin = ymax = s.y[i];
        any = true;
      }
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  if (xmax - xmin < 1e-12) {
    xmin -= 1.0;
    xmax += 1.0;
  }
  if (ymax - ymin < 1e-12) {
    ymin -= 1.0;
    ymax += 1.0;
  }
  const double ypad = 0.06 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;
  auto px = [&](double x) { return l + (x - xmin) / (xmax - xmin) * (w - l - r); };
  auto py = [&](double y) { return h - b - (y - ymin) / (ymax - ymin) * (h - t - b); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::num("%.0f", w) +
         "\" height=\"" + detail::num("%.0f", h) + "\" font-family=\"sans-serif\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + detail::num("%.1f", l) + "\" y=\"24\" font-size=\"15\">" + title +
         "</text>\n";

  for (int i = 0; i <= 4; ++i) {
    const double gx = xmin + (xmax - xmin) * i / 4.0;
    const double gy = ymin + (ymax - ymin) * i / 4.0;
    svg += "<line x1=\"" + detail::num("%.1f", px(gx)) + "\" y1=\"" +
           detail::num("%.1f", t) + "\" x2=\"" + detail::num("%.1f", px(gx)) +
           "\" y2=\"" + detail::num("%.1f", h - b) +
           "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + detail::num("%.1f", l) + "\" y1=\"" +
           detail::num("%.1f", py(gy)) + "\" x2=\"" + detail::num("%.1f", w - r) +
           "\" y2=\"" + detail::num("%.1f", py(gy)) +
           "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + detail::num("%.1f", px(gx)) + "\" y=\"" +
           detail::num("%.1f", h - b + 18) + "\" font-size=\"11\" text-anchor=\"middle\">" +
           detail::num("%.4g", gx) + "</text>\n";
    svg += "<text x=\"" + detail::num("%.1f", l - 8) + "\" y=\"" +
           detail::num("%.1f", py(gy) + 4) + "\" font-size=\"11\" text-anchor=\"end\">" +
           detail::num("%.4g", gy) + "</text>\n";
  }
  svg += "<rect x=\"" + detail::num("%.1f", l) + "\" y=\"" + detail::num("%.1f", t) +
         "\" width=\"" + detail::num("%.1f", w - l - r) + "\" height=\"" +
         detail::num("%.1f", h - t - b) + "\" fill=\"none\" stroke=\"#444444\"/>\n";
  svg += "<text x=\"" + detail::num("%.1f", (l + w - r) / 2) + "\" y=\"" +
         detail::num("%.1f", h - 14) + "\" font-size=\"12\" text-anchor=\"middle\">" +
         xlabel + "</text>\n";
  svg += "<text x=\"18\" y=\"" + detail::num("%.1f", (t + h - b) / 2) +
         "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         detail::num("%.1f", (t + h - b) / 2) + ")\">" + ylabel + "</text>\n";

  int si = 0;
  for (const Series& s : series) {
    const char* color = kPalette[si % 8];
    std::string pl;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      pl += detail::num("%.1f", px(s.x[i])) + "," + detail::num("%.1f", py(s.y[i])) + " ";
    }
    svg += "<polyline points=\"" + pl + "\" fill=\"none\" stroke=\"" + color +
           "\" stroke-width=\"1.8\"/>\n";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      svg += "<circle cx=\"" + detail::num("%.1f", px(s.x[i])) + "\" cy=\"" +
             detail::num("%.1f", py(s.y[i])) + "\" r=\"3.5\" fill=\"" +
             (s.open_markers ? "white" : color) + "\" stroke=\"" + color +
             "\" stroke-width=\"1.5\"/>\n";
    }
    const double ly = t + 16 + 18.0 * si;
    svg += "<circle cx=\"" + detail::num("%.1f", w - r + 14) + "\" cy=\"" +
           detail::num("%.1f", ly - 4) + "\" r=\"3.5\" fill=\"" +
           (s.open_markers ? "white" : color) + "\" stroke=\"" + color +
           "\" stroke-width=\"1.5\"/>\n";
    svg += "<text x=\"" + detail::num("%.1f", w - r + 24) + "\" y=\"" +
           detail::num("%.1f", ly) + "\" font-size=\"11\">" + s.label + "</text>\n";
    ++si;
  }
  svg += "</svg>\n";
  return svg;
}

namespace detail {

// Mean over drops, keyed by (snr, n_ues, length); value picked by a selector.
template <typename F>
std::map<std::tuple<double, int, double>, double> drop_mean(
    const std::vector<SweepPoint>& pts, F&& value) {
  std::map<std::tuple<double, int, double>, std::pair<double, int>> acc;
  for (const SweepPoint& p : pts) {
    if (!p.ok) continue;
    auto& slot = acc[{p.spec.snr_db, p.spec.n_ues, p.spec.length_km}];
    slot.first += value(p.report);
    slot.second += 1;
  }
  std::map<std::tuple<double, int, double>, double> mean;
  for (const auto& [key, slot] : acc) mean[key] = slot.first / slot.second;
  return mean;
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("emit: cannot write '" + path + "'");
  f << text;
}

}  // namespace detail

/// Writes sweep.csv plus the three standard plots (cell throughput vs SNR,
/// cell throughput vs distance, fronthaul pre-MIMO SINR vs distance) into
/// `dir`. Returns the written paths.
inline std::vector<std::string> write_sweep_outputs(const RunConfig& cfg,
                                                    const std::vector<SweepPoint>& pts,
                                                    const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::vector<std::string> written;

  const std::string csv_path = dir + "/sweep.csv";
  detail::write_file(csv_path, to_csv(cfg, pts));
  written.push_back(csv_path);

  const auto rate = detail::drop_mean(
      pts, [](const bbu::CellReport& r) { return r.cell_rate_bps / 1e9; });
  const auto pre = detail::drop_mean(
      pts, [](const bbu::CellReport& r) { return r.pre_mimo_sinr_db; });

  // throughput vs SNR: one series per (UE count, length)
  {
    std::map<std::pair<int, double>, Series> by;
    for (const auto& [key, v] : rate) {
      const auto& [snr, ues, len] = key;
      Series& s = by[{ues, len}];
      if (s.label.empty())
        s.label = std::to_string(ues) + " UE, " + detail::num("%.0f", len) + " km";
      s.x.push_back(snr);
      s.y.push_back(v);
    }
    std::vector<Series> series;
    for (auto& [k, s] : by) {
      s.open_markers = series.size() % 2 == 1;
      series.push_back(std::move(s));
    }
    const std::string p = dir + "/throughput_vs_snr.svg";
    detail::write_file(
        p, svg_line_plot("cell throughput vs received SNR (" + cfg.name + ")",
                         "received SNR [dB]", "cell throughput [Gb/s]", series));
    written.push_back(p);
  }

  // throughput and pre-MIMO SINR vs distance: one series per (SNR, UE count)
  auto by_distance = [&](const std::map<std::tuple<double, int, double>, double>& tab,
                         const char* unit) {
    std::map<std::pair<double, int>, Series> by;
    for (const auto& [key, v] : tab) {
      const auto& [snr, ues, len] = key;
      Series& s = by[{snr, ues}];
      if (s.label.empty())
        s.label = detail::num("%.0f", snr) + " dB, " + std::to_string(ues) + " UE" +
                  std::string(unit);
      s.x.push_back(len);
      s.y.push_back(v);
    }
    std::vector<Series> series;
    for (auto& [k, s] : by) {
      s.open_markers = series.size() % 2 == 1;
      series.push_back(std::move(s));
    }
    return series;
  };
  {
    const std::string p = dir + "/throughput_vs_length.svg";
    detail::write_file(p, svg_line_plot("cell throughput vs fiber length (" + cfg.name + ")",
                                        "fiber length [km]", "cell throughput [Gb/s]",
                                        by_distance(rate, "")));
    written.push_back(p);
  }
  {
    const std::string p = dir + "/pre_mimo_vs_length.svg";
    detail::write_file(p, svg_line_plot("fronthaul pre-MIMO SINR vs fiber length (" +
                                            cfg.name + ")",
                                        "fiber length [km]", "pre-MIMO SINR [dB]",
                                        by_distance(pre, "")));
    written.push_back(p);
  }
  return written;
}

}  // namespace fhsim::harness
