#pragma once

#include <concepts>
#include <string>
#include <utility>
#include <vector>

#include "lrd/jackknife.hpp"
#include "lrd/measures.hpp"

namespace lrd {

enum class KernelShape { Uniform, Gaussian, Heaviside };

std::string kernel_name(KernelShape shape);
KernelShape parse_kernel_shape(const std::string& name);

// Weighting function K((position - center) / dilatation).
class Kernel {
 public:
  Kernel(KernelShape shape, double center, double dilatation);

  KernelShape shape() const noexcept { return shape_; }
  double center() const noexcept { return center_; }
  double dilatation() const noexcept { return dilatation_; }

  double operator()(double position) const noexcept;

 private:
  KernelShape shape_;
  double center_;
  double dilatation_;
};

inline double kernel_weight(const Kernel& kernel, double position) { return kernel(position); }

template <typename W>
concept WeightFunction = std::regular_invocable<const W&, double> &&
                         std::convertible_to<std::invoke_result_t<const W&, double>, double>;

// Per-row mask over boxes; an empty mask keeps every box.
using BoxMask = std::vector<bool>;

// Kernel-weighted average of one horizon row over its non-flagged, unmasked cells.
template <WeightFunction W>
double eta(const MeasureField& field, int h, const W& time_weight, const BoxMask& keep = {}) {
  const std::size_t r = field.grid.row_of(h);
  const auto& fits = field.grid.fits()[r];
  const auto& values = field.values[r];
  const auto& flags = field.flags[r];

  double numerator = 0.0;
  double mass = 0.0;
  for (std::size_t i = 0; i < fits.size(); ++i) {
    if (flags[i] || (!keep.empty() && !keep[i])) continue;
    const double w = time_weight(fits[i].center_t);
    if (w == 0.0) continue;
    numerator += w * values(static_cast<Index>(i));
    mass += w;
  }
  if (!(mass > 0.0)) {
    throw Error(Errc::ZeroKernelMass, "no kernel mass at horizon " + std::to_string(h));
  }
  return numerator / mass;
}

struct PhiValue {
  double value = 0.0;
  std::vector<int> skipped_horizons;  // rows whose eta had no kernel mass
  std::size_t degenerate_cells_skipped = 0;
};

// Scale-kernel-weighted average of per-horizon eta values. `keep` holds one mask per
// grid row (or is empty).
template <WeightFunction WS, WeightFunction WT>
PhiValue phi_value(const MeasureField& field, const WS& scale_weight, const WT& time_weight,
                   const std::vector<BoxMask>& keep = {}) {
  PhiValue out;
  double numerator = 0.0;
  double mass = 0.0;
  const auto& horizons = field.grid.horizons();
  for (std::size_t r = 0; r < horizons.size(); ++r) {
    const int h = horizons[r];
    const double ws = scale_weight(static_cast<double>(h));
    double eta_h = 0.0;
    try {
      eta_h = eta(field, h, time_weight, keep.empty() ? BoxMask{} : keep[r]);
    } catch (const Error& e) {
      if (e.code() != Errc::ZeroKernelMass) throw;
      out.skipped_horizons.push_back(h);
      continue;
    }
    for (const bool f : field.flags[r]) out.degenerate_cells_skipped += f ? 1 : 0;
    if (ws == 0.0) continue;
    numerator += ws * eta_h;
    mass += ws;
  }
  if (!(mass > 0.0)) {
    throw Error(Errc::ZeroKernelMass, "no scale-kernel mass over the usable horizons");
  }
  out.value = numerator / mass;
  return out;
}

// Resampling unit for the jackknife error of Phi.
enum class JackknifeUnit {
  FinestBox,    // delete one box of the finest horizon plus every overlapping box
  CoarsestBox,  // same, keyed on the coarsest horizon
};

struct IndicatorResult {
  double value = 0.0;
  double jackknife_error = 0.0;
  std::size_t jackknife_units = 0;
  MeasureKind measure;
  double rho = 0.0;
  double tau = 0.0;
  double delta_t = 0.0;
  double delta_s = 0.0;
  std::pair<KernelShape, KernelShape> kernel_shapes{KernelShape::Uniform, KernelShape::Uniform};
  std::size_t degenerate_cells_skipped = 0;
  std::vector<std::string> warnings;
};

struct IndicatorParameters {
  double tau = 0.0;      // last sample index
  double delta_t = 0.0;  // (max(t) - min(t)) / 4
  double delta_s = 0.0;  // 100 * rho
};

IndicatorParameters default_parameters(const LRDGrid& grid, double rho);

// Eta at one horizon with delete-one-box jackknife error. Units are the cells that
// carry kernel mass.
JackknifeEstimate eta_estimate(const MeasureField& field, int h, const Kernel& time_kernel);

// Phi with jackknife error. The scale kernel's center is rho, the time kernel's is tau.
IndicatorResult phi_indicator(const MeasureField& field, const Kernel& scale_kernel,
                              const Kernel& time_kernel,
                              JackknifeUnit unit = JackknifeUnit::FinestBox);

}  // namespace lrd
