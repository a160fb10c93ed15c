#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrd/config.hpp"

namespace lrd {

// "2.71(7)": the value rounded to the last digit of its one-significant-digit error.
std::string format_with_error(double value, double error);

struct IndicatorRow {
  std::string measure;
  int rho = 0;
  double phi = 0.0;
  std::optional<double> phi_error;
  std::optional<double> eta;
  std::optional<double> eta_error;
  std::size_t jackknife_units = 0;
  std::size_t degenerate_cells_skipped = 0;
  double tau = 0.0;
  double delta_t = 0.0;
  double delta_s = 0.0;
  std::vector<std::string> warnings;
};

struct SeriesReport {
  std::string name;
  std::string checksum;
  Index n = 0;
  double sharpe = 0.0;
  std::vector<int> horizons;
  std::vector<IndicatorRow> rows;  // ordered by measure, then rho
};

// Phi and eta for every configured (measure, rho), plus the global Sharpe ratio.
SeriesReport analyze(const PnLSeries& series, const Config& config, const std::string& name);

struct CompareReport {
  Config config;
  SeriesReport a;
  SeriesReport b;
};

CompareReport run_compare(const PnLSeries& series_a, const PnLSeries& series_b,
                          const Config& config);

std::string render_text(const CompareReport& report);
std::string render_json(const CompareReport& report);
std::string render_json(const SeriesReport& report, const Config& config);

}  // namespace lrd
