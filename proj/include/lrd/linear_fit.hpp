#pragma once

#include <cmath>

#include <Eigen/Core>

namespace lrd {

// Least-squares line y(t) = intercept + slope * t on local coordinates t = 0..h-1.
template <typename Scalar>
struct LineFit {
  Scalar slope{};
  Scalar intercept{};
  Scalar rms_residual{};  // sqrt(sum(residual^2) / h), population divisor
};

// Closed-form OLS in centered coordinates; accepts any Eigen vector expression.
template <typename Derived>
LineFit<typename Derived::Scalar> fit_line(const Eigen::MatrixBase<Derived>& y) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index h = y.size();
  const Scalar count = static_cast<Scalar>(h);
  const Scalar t_mean = (count - Scalar(1)) / Scalar(2);
  const Scalar y_mean = y.mean();

  // sum((t - t_mean)^2) = h (h^2 - 1) / 12
  const Scalar t_ss = count * (count * count - Scalar(1)) / Scalar(12);
  const auto t_centered =
      Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::LinSpaced(h, -t_mean, t_mean);

  LineFit<Scalar> fit;
  const auto y_centered = (y.derived().array() - y_mean).matrix().eval();
  fit.slope = t_centered.dot(y_centered) / t_ss;
  fit.intercept = y_mean - fit.slope * t_mean;
  const Scalar ss_res = (y_centered.array() - fit.slope * t_centered.array()).square().sum();
  fit.rms_residual = std::sqrt(ss_res / count);
  return fit;
}

template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> fit_residuals(
    const Eigen::MatrixBase<Derived>& y, const LineFit<typename Derived::Scalar>& fit) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index h = y.size();
  const auto t = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::LinSpaced(h, Scalar(0), Scalar(h - 1));
  return y.derived() - (fit.intercept + fit.slope * t.array()).matrix();
}

}  // namespace lrd
