#include "lrd/series.hpp"

#include <cmath>
#include <regex>

#include "lrd/error.hpp"

namespace lrd {

namespace {

bool looks_iso8601(const std::string& label) {
  static const std::regex pattern(R"(^\d{4}-\d{2}-\d{2}([T ][0-9:.+\-Z]*)?$)");
  return std::regex_match(label, pattern);
}

}  // namespace

double PnLSeries::scale() const noexcept {
  const double range = values_.maxCoeff() - values_.minCoeff();
  return range > 0.0 ? range : 1.0;
}

bool PnLSeries::operator==(const PnLSeries& other) const {
  return values_.size() == other.values_.size() && values_ == other.values_ &&
         labels_ == other.labels_;
}

PnLSeries validate(std::span<const double> raw, std::optional<std::vector<std::string>> labels) {
  if (raw.size() < 2) {
    throw Error(Errc::TooShort, "a PnL series needs at least 2 samples, got " +
                                    std::to_string(raw.size()));
  }
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (!std::isfinite(raw[k])) {
      throw Error(Errc::NonFinite, "non-finite value at index " + std::to_string(k), k);
    }
  }

  std::vector<std::string> names;
  if (labels) {
    names = std::move(*labels);
    if (names.size() != raw.size()) {
      throw Error(Errc::LabelMismatch, "expected " + std::to_string(raw.size()) +
                                           " labels, got " + std::to_string(names.size()));
    }
    for (std::size_t k = 0; k < names.size(); ++k) {
      if (!looks_iso8601(names[k])) {
        throw Error(Errc::LabelMismatch, "label '" + names[k] + "' is not an ISO-8601 date", k);
      }
      if (k > 0 && !(names[k - 1] < names[k])) {
        throw Error(Errc::LabelMismatch, "labels not strictly increasing at index " +
                                             std::to_string(k), k);
      }
    }
  }

  VectorXd values = Eigen::Map<const VectorXd>(raw.data(), static_cast<Index>(raw.size()));
  return PnLSeries(std::move(values), std::move(names));
}

ReturnSeries increments(const PnLSeries& series) {
  const Index n = series.size();
  const auto& x = series.values();
  return ReturnSeries{x.tail(n - 1) - x.head(n - 1)};
}

}  // namespace lrd
