#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lrd/error.hpp"

namespace lrd {

struct JackknifeEstimate {
  double value = 0.0;  // estimator on the full unit set
  double error = 0.0;  // delete-one standard error
  std::size_t m = 0;   // number of resampling units
};

// Delete-one standard error from leave-one-out replicates:
//   sqrt((m - 1) / m * sum_j (theta_j - mean(theta))^2)
template <typename Scalar>
Scalar jackknife_error(std::span<const Scalar> replicates) {
  const std::size_t m = replicates.size();
  bool identical = true;
  Scalar mean{};
  for (std::size_t j = 0; j < m; ++j) {
    mean += replicates[j];
    identical = identical && replicates[j] == replicates[0];
  }
  if (identical) return Scalar(0);
  mean /= static_cast<Scalar>(m);
  Scalar ss{};
  for (const Scalar theta : replicates) ss += (theta - mean) * (theta - mean);
  return std::sqrt(static_cast<Scalar>(m - 1) / static_cast<Scalar>(m) * ss);
}

// `estimator` maps a subset of units (std::span<const Unit>) to a value. Failures
// inside a replicate are rethrown as EstimatorFailure carrying the deleted index.
template <typename Unit, typename Estimator>
JackknifeEstimate jackknife(std::span<const Unit> units, Estimator&& estimator) {
  const std::size_t m = units.size();
  if (m < 2) {
    throw Error(Errc::TooFewUnits, "jackknife needs at least 2 units, got " + std::to_string(m));
  }

  JackknifeEstimate out;
  out.m = m;
  out.value = estimator(units);

  std::vector<double> replicates(m);
  std::vector<Unit> subset;
  subset.reserve(m - 1);
  for (std::size_t j = 0; j < m; ++j) {
    subset.clear();
    for (std::size_t k = 0; k < m; ++k) {
      if (k != j) subset.push_back(units[k]);
    }
    try {
      replicates[j] = estimator(std::span<const Unit>(subset));
    } catch (const Error& e) {
      throw Error(Errc::EstimatorFailure,
                  "replicate " + std::to_string(j) + " failed: " + e.what(), j);
    }
  }
  out.error = jackknife_error(std::span<const double>(replicates));
  return out;
}

template <typename Unit, typename Estimator>
JackknifeEstimate jackknife(const std::vector<Unit>& units, Estimator&& estimator) {
  return jackknife(std::span<const Unit>(units), std::forward<Estimator>(estimator));
}

}  // namespace lrd
