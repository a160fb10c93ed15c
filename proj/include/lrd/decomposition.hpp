#pragma once

#include <span>
#include <vector>

#include "lrd/series.hpp"

namespace lrd {

// Half-open sample range [start, end) holding one box at a given horizon.
struct Box {
  int horizon = 0;
  int index = 0;  // 0-based, oldest first
  Index start = 0;
  Index end = 0;  // exclusive

  bool operator==(const Box&) const = default;
};

struct LocalFit {
  Box box;
  double slope = 0.0;         // currency per sample
  double intercept = 0.0;     // fitted value at the first sample of the box
  double local_return = 0.0;  // fitted endpoint difference, slope * (h - 1)
  double local_risk = 0.0;    // RMS residual around the fit
  double center_t = 0.0;      // start + (h - 1) / 2, in series coordinates
};

// Time x horizon field of local fits.
class LRDGrid {
 public:
  LRDGrid(std::vector<int> horizons, std::vector<std::vector<LocalFit>> fits, Index n, double scale)
      : horizons_(std::move(horizons)), fits_(std::move(fits)), n_(n), scale_(scale) {}

  const std::vector<int>& horizons() const noexcept { return horizons_; }
  const std::vector<std::vector<LocalFit>>& fits() const noexcept { return fits_; }
  Index n() const noexcept { return n_; }

  // Range of the source series (or 1 if constant); carries the degeneracy floor.
  double scale() const noexcept { return scale_; }
  double degeneracy_floor() const noexcept { return kDegeneracyFactor * scale_; }

  // Position of h in horizons(); throws InvalidArgument when absent.
  std::size_t row_of(int h) const;
  const std::vector<LocalFit>& row(int h) const { return fits_[row_of(h)]; }

 private:
  std::vector<int> horizons_;
  std::vector<std::vector<LocalFit>> fits_;
  Index n_;
  double scale_;
};

// floor(n / h) boxes anchored to the most recent sample; the remainder is dropped
// from the oldest end.
std::vector<Box> partition(Index n, int h);
std::vector<Box> partition(const PnLSeries& series, int h);

LocalFit fit_box(const PnLSeries& series, const Box& box);

// Horizons are sorted and deduplicated; each needs at least two boxes.
LRDGrid decompose(const PnLSeries& series, std::span<const int> horizons);

// {50, 100, 250, 500, 1000} restricted to horizons with at least two boxes.
std::vector<int> default_horizons(Index n);

}  // namespace lrd
