#pragma once

#include <Eigen/Core>

namespace lrd {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using VectorXd = Vector<double>;
using Index = Eigen::Index;

// Relative floor below which a local or global risk is treated as zero.
inline constexpr double kDegeneracyFactor = 1e-12;

}  // namespace lrd
