#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "lrd/measures.hpp"

namespace lrd {

// Identity of the pseudorandom stream; recorded in exported metadata.
inline constexpr std::string_view kGeneratorName = "mt19937_64/marsaglia-polar";

// Standard normal draws from a 64-bit Mersenne Twister. The engine's output sequence is
// fixed by the standard and the transform is implemented here, so a seed gives the same
// stream on every conforming platform.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : engine_(seed) {}
  double operator()();

 private:
  double uniform();

  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

struct Segment {
  Index length = 0;    // increments covered
  double drift = 0.0;  // currency per sample
};

struct SynthSpec {
  Index n = 0;
  std::vector<Segment> segments;  // lengths sum to n - 1
  double noise_amplitude = 0.0;   // standard deviation of each increment's noise
  std::uint64_t seed = 0;
};

void check_spec(const SynthSpec& spec);

// x(0) = 0, x(k+1) = x(k) + drift(k) + noise_amplitude * z(k).
PnLSeries generate(const SynthSpec& spec);

// Drift whose expected Sharpe ratio (single segment) equals `target_sharpe`.
double calibrate(double target_sharpe, double noise_amplitude, Index n, double annualization);

// Rescales the segment drifts (read as a relative profile) so the realized Sharpe ratio
// of generate(result) equals `target_sharpe` for this seed.
SynthSpec calibrate_realized(SynthSpec shape, double target_sharpe, double annualization);

// Two-series experiment: "blue" is noisier and underperforms over a final stretch,
// "green" is a single steady drift. Both are calibrated to the same realized Sharpe.
struct PairSpec {
  Index n = 2000;
  double green_noise = 1.0;
  double noise_ratio = 1.5;
  double target_sharpe = 0.7;
  double annualization = kDailyAnnualization;
  double weak_fraction = 0.25;  // share of increments in blue's weak final stretch
  double weak_drift = 0.0;      // blue's weak-stretch drift relative to its main drift
  std::uint64_t seed = 0;
};

struct SeriesPair {
  SynthSpec blue_spec;
  SynthSpec green_spec;
  PnLSeries blue;
  PnLSeries green;
};

SeriesPair two_series_pair(const PairSpec& spec);

}  // namespace lrd
