#include "lrd/decomposition.hpp"

#include <algorithm>
#include <string>

#include "lrd/error.hpp"
#include "lrd/linear_fit.hpp"

namespace lrd {

std::size_t LRDGrid::row_of(int h) const {
  const auto it = std::lower_bound(horizons_.begin(), horizons_.end(), h);
  if (it == horizons_.end() || *it != h) {
    throw Error(Errc::InvalidArgument, "horizon " + std::to_string(h) + " is not in the grid");
  }
  return static_cast<std::size_t>(it - horizons_.begin());
}

std::vector<Box> partition(Index n, int h) {
  if (h < 2) {
    throw Error(Errc::HorizonTooSmall, "horizon must be at least 2, got " + std::to_string(h));
  }
  if (h > n) {
    throw Error(Errc::HorizonTooLarge, "horizon " + std::to_string(h) +
                                           " exceeds series length " + std::to_string(n));
  }
  const Index count = n / h;
  const Index offset = n - count * h;
  std::vector<Box> boxes;
  boxes.reserve(static_cast<std::size_t>(count));
  for (Index i = 0; i < count; ++i) {
    const Index start = offset + i * h;
    boxes.push_back(Box{h, static_cast<int>(i), start, start + h});
  }
  return boxes;
}

std::vector<Box> partition(const PnLSeries& series, int h) { return partition(series.size(), h); }

LocalFit fit_box(const PnLSeries& series, const Box& box) {
  const Index h = box.end - box.start;
  if (h < 2 || box.horizon != h) {
    throw Error(Errc::DegenerateBox, "box [" + std::to_string(box.start) + ", " +
                                         std::to_string(box.end) + ") cannot be fitted");
  }
  if (box.start < 0 || box.end > series.size()) {
    throw Error(Errc::InvalidArgument, "box lies outside the series");
  }

  const auto line = fit_line(series.values().segment(box.start, h));
  LocalFit fit;
  fit.box = box;
  fit.slope = line.slope;
  fit.intercept = line.intercept;
  fit.local_return = line.slope * static_cast<double>(h - 1);
  fit.local_risk = line.rms_residual;
  fit.center_t = static_cast<double>(box.start) + static_cast<double>(h - 1) / 2.0;
  return fit;
}

LRDGrid decompose(const PnLSeries& series, std::span<const int> horizons) {
  if (horizons.empty()) {
    throw Error(Errc::InvalidArgument, "at least one horizon is required");
  }
  std::vector<int> sorted(horizons.begin(), horizons.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<std::vector<LocalFit>> rows;
  rows.reserve(sorted.size());
  for (const int h : sorted) {
    const auto boxes = partition(series, h);
    if (boxes.size() < 2) {
      throw Error(Errc::InsufficientBoxes,
                  "horizon " + std::to_string(h) + " yields fewer than 2 boxes");
    }
    std::vector<LocalFit> row;
    row.reserve(boxes.size());
    for (const auto& box : boxes) row.push_back(fit_box(series, box));
    rows.push_back(std::move(row));
  }
  return LRDGrid(std::move(sorted), std::move(rows), series.size(), series.scale());
}

std::vector<int> default_horizons(Index n) {
  std::vector<int> out;
  for (const int h : {50, 100, 250, 500, 1000}) {
    if (n / h >= 2) out.push_back(h);
  }
  return out;
}

}  // namespace lrd
