#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lrd/kernels.hpp"
#include "lrd/synth.hpp"

namespace lrd {

// `key = value` lines; `#` starts a comment. Duplicate keys are rejected.
std::map<std::string, std::string> parse_key_values(std::istream& in);

struct Config {
  std::vector<int> horizons;                   // empty: default_horizons(n)
  std::vector<std::string> measures{"lsr"};    // each "lsr" or "lra"
  double beta = 0.75;
  bool normalize = false;
  KernelShape kernel_time = KernelShape::Uniform;
  KernelShape kernel_scale = KernelShape::Uniform;
  std::vector<int> rho;                        // empty: every grid horizon
  std::optional<double> tau;                   // empty: last sample
  std::optional<double> delta_t;               // empty: (max(t) - min(t)) / 4
  std::optional<double> delta_s;               // empty: 100 * rho
  double annualization = kDailyAnnualization;
  JackknifeUnit jackknife_unit = JackknifeUnit::FinestBox;
};

Config parse_config(std::istream& in);
Config load_config(const std::filesystem::path& path);

// Synthetic series description. Either explicit segments, or `preset = blue|green` which
// reproduces one side of two_series_pair() for the same seed.
struct SynthRequest {
  SynthSpec spec;
  std::optional<double> target_sharpe;  // realized calibration of the segment profile
  double annualization = kDailyAnnualization;
};

SynthRequest parse_synth_spec(std::istream& in, std::optional<std::uint64_t> seed_override);
SynthRequest load_synth_spec(const std::filesystem::path& path,
                             std::optional<std::uint64_t> seed_override);

PnLSeries run_synth(const SynthRequest& request);

}  // namespace lrd
