#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lrd/types.hpp"

namespace lrd {

// Cumulative profit-and-loss curve, one sample per row. Only obtainable via validate().
class PnLSeries {
 public:
  Index size() const noexcept { return values_.size(); }
  const VectorXd& values() const noexcept { return values_; }
  double operator[](Index k) const { return values_(k); }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  // max(x) - min(x), or 1 when the series is constant. Sets the degeneracy floor.
  double scale() const noexcept;

  bool operator==(const PnLSeries& other) const;

 private:
  PnLSeries(VectorXd values, std::vector<std::string> labels)
      : values_(std::move(values)), labels_(std::move(labels)) {}

  friend PnLSeries validate(std::span<const double>, std::optional<std::vector<std::string>>);

  VectorXd values_;
  std::vector<std::string> labels_;
};

struct ReturnSeries {
  VectorXd increments;  // r(k) = x(k+1) - x(k)
};

PnLSeries validate(std::span<const double> raw,
                   std::optional<std::vector<std::string>> labels = std::nullopt);

inline PnLSeries validate(const VectorXd& raw,
                          std::optional<std::vector<std::string>> labels = std::nullopt) {
  return validate(std::span<const double>(raw.data(), static_cast<std::size_t>(raw.size())),
                  std::move(labels));
}

ReturnSeries increments(const PnLSeries& series);

}  // namespace lrd
