#include "lrd/kernels.hpp"

#include <cmath>
#include <numeric>

namespace lrd {

std::string kernel_name(KernelShape shape) {
  switch (shape) {
    case KernelShape::Uniform: return "uniform";
    case KernelShape::Gaussian: return "gaussian";
    case KernelShape::Heaviside: return "heaviside";
  }
  return "uniform";
}

KernelShape parse_kernel_shape(const std::string& name) {
  if (name == "uniform") return KernelShape::Uniform;
  if (name == "gaussian") return KernelShape::Gaussian;
  if (name == "heaviside") return KernelShape::Heaviside;
  throw Error(Errc::ConfigError, "unknown kernel '" + name + "'");
}

Kernel::Kernel(KernelShape shape, double center, double dilatation)
    : shape_(shape), center_(center), dilatation_(dilatation) {
  if (!std::isfinite(center)) {
    throw Error(Errc::InvalidArgument, "kernel center must be finite");
  }
  if (!std::isfinite(dilatation) || !(dilatation > 0.0)) {
    throw Error(Errc::InvalidArgument, "kernel dilatation must be finite and > 0");
  }
}

double Kernel::operator()(double position) const noexcept {
  const double u = (position - center_) / dilatation_;
  switch (shape_) {
    case KernelShape::Uniform: return 1.0;
    case KernelShape::Gaussian: return std::exp(-0.5 * u * u);
    case KernelShape::Heaviside: return std::abs(u) <= 1.0 ? 1.0 : 0.0;
  }
  return 0.0;
}

IndicatorParameters default_parameters(const LRDGrid& grid, double rho) {
  const double last = static_cast<double>(grid.n() - 1);
  return IndicatorParameters{last, last / 4.0, 100.0 * rho};
}

JackknifeEstimate eta_estimate(const MeasureField& field, int h, const Kernel& time_kernel) {
  const std::size_t r = field.grid.row_of(h);
  const auto& fits = field.grid.fits()[r];
  const auto& flags = field.flags[r];

  std::vector<std::size_t> units;
  for (std::size_t i = 0; i < fits.size(); ++i) {
    if (!flags[i] && time_kernel(fits[i].center_t) > 0.0) units.push_back(i);
  }
  if (units.empty()) {
    throw Error(Errc::ZeroKernelMass, "no kernel mass at horizon " + std::to_string(h));
  }

  return jackknife(units, [&](std::span<const std::size_t> subset) {
    BoxMask keep(fits.size(), false);
    for (const auto i : subset) keep[i] = true;
    return eta(field, h, time_kernel, keep);
  });
}

namespace {

// Keep-masks for every grid row after deleting the anchor boxes not in `kept`.
std::vector<BoxMask> slice_masks(const LRDGrid& grid, std::size_t anchor_row,
                                 std::span<const std::size_t> kept) {
  const auto& anchors = grid.fits()[anchor_row];
  std::vector<bool> deleted(anchors.size(), true);
  for (const auto j : kept) deleted[j] = false;

  std::vector<BoxMask> masks;
  masks.reserve(grid.fits().size());
  for (const auto& row : grid.fits()) {
    BoxMask keep(row.size(), true);
    for (std::size_t j = 0; j < anchors.size(); ++j) {
      if (!deleted[j]) continue;
      const auto& gone = anchors[j].box;
      for (std::size_t i = 0; i < row.size(); ++i) {
        const auto& box = row[i].box;
        if (box.start < gone.end && gone.start < box.end) keep[i] = false;
      }
    }
    masks.push_back(std::move(keep));
  }
  return masks;
}

}  // namespace

IndicatorResult phi_indicator(const MeasureField& field, const Kernel& scale_kernel,
                              const Kernel& time_kernel, JackknifeUnit unit) {
  const auto full = phi_value(field, scale_kernel, time_kernel);

  IndicatorResult result;
  result.value = full.value;
  result.measure = field.kind;
  result.rho = scale_kernel.center();
  result.tau = time_kernel.center();
  result.delta_t = time_kernel.dilatation();
  result.delta_s = scale_kernel.dilatation();
  result.kernel_shapes = {scale_kernel.shape(), time_kernel.shape()};
  result.degenerate_cells_skipped = full.degenerate_cells_skipped;
  for (const int h : full.skipped_horizons) {
    result.warnings.push_back("horizon " + std::to_string(h) + " skipped: no kernel mass");
  }

  const std::size_t anchor_row =
      unit == JackknifeUnit::FinestBox ? 0 : field.grid.horizons().size() - 1;
  std::vector<std::size_t> units(field.grid.fits()[anchor_row].size());
  std::iota(units.begin(), units.end(), std::size_t{0});

  const auto estimate = jackknife(units, [&](std::span<const std::size_t> kept) {
    if (kept.size() == units.size()) return full.value;
    return phi_value(field, scale_kernel, time_kernel, slice_masks(field.grid, anchor_row, kept))
        .value;
  });
  result.jackknife_error = estimate.error;
  result.jackknife_units = estimate.m;
  if (estimate.m < 4) {
    result.warnings.push_back("jackknife uses only " + std::to_string(estimate.m) +
                              " units; the error estimate is fragile");
  }
  return result;
}

}  // namespace lrd
