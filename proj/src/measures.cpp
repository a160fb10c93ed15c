#include "lrd/measures.hpp"

#include <algorithm>
#include <numeric>

#include "lrd/error.hpp"

namespace lrd {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double population_sd(const VectorXd& v) {
  const double mean = v.mean();
  return std::sqrt((v.array() - mean).square().sum() / static_cast<double>(v.size()));
}

void check_beta(double beta) {
  if (!std::isfinite(beta) || beta < 0.0) {
    throw Error(Errc::InvalidArgument, "beta must be finite and >= 0");
  }
}

}  // namespace

std::string measure_name(const MeasureKind& kind) {
  return std::visit(overloaded{[](const LocalReturn&) { return std::string("local_return"); },
                               [](const LocalRisk&) { return std::string("local_risk"); },
                               [](const LocalSharpe&) { return std::string("lsr"); },
                               [](const RiskAdjusted&) { return std::string("lra"); }},
                    kind);
}

std::size_t MeasureField::flagged_count() const {
  std::size_t total = 0;
  for (const auto& row : flags) total += static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
  return total;
}

double sharpe_ratio(const VectorXd& increments, double annualization, double floor) {
  if (increments.size() < 2) {
    throw Error(Errc::TooShort, "the Sharpe ratio needs at least 2 increments");
  }
  const double sd = population_sd(increments);
  if (!(sd > floor)) {
    throw Error(Errc::ZeroVolatility, "return volatility is below the degeneracy floor");
  }
  return annualization * increments.mean() / sd;
}

double risk_adjusted_return(const VectorXd& increments, double beta) {
  if (increments.size() < 2) {
    throw Error(Errc::TooShort, "the risk adjusted return needs at least 2 increments");
  }
  check_beta(beta);
  return increments.mean() - beta * population_sd(increments);
}

double global_sharpe(const PnLSeries& series, double annualization) {
  return sharpe_ratio(increments(series).increments, annualization,
                      kDegeneracyFactor * series.scale());
}

double global_rar(const PnLSeries& series, double beta) {
  return risk_adjusted_return(increments(series).increments, beta);
}

double phi_h(const LRDGrid& grid, int h) {
  const auto& row = grid.row(h);
  double sum_return = 0.0;
  double sum_risk = 0.0;
  for (const auto& fit : row) {
    sum_return += fit.local_return;
    sum_risk += fit.local_risk;
  }
  const double count = static_cast<double>(row.size());
  const double mean_risk = sum_risk / count;
  if (!(mean_risk > grid.degeneracy_floor())) {
    throw Error(Errc::ZeroMeanRisk,
                "mean local risk vanishes at horizon " + std::to_string(h));
  }
  return (sum_return / count) / mean_risk;
}

std::optional<double> local_sharpe(const LocalFit& fit, double floor) {
  if (!(fit.local_risk > floor)) return std::nullopt;
  return fit.local_return / fit.local_risk;
}

double local_rar(const LocalFit& fit, double beta, double phi) {
  if (!std::isfinite(phi)) {
    throw Error(Errc::InvalidArgument, "phi must be finite");
  }
  return fit.local_return - beta * phi * fit.local_risk;
}

MeasureField measure_field(const LRDGrid& grid, const MeasureKind& kind) {
  MeasureField field{grid, kind, {}, {}, {}, 1.0};
  const auto& rows = grid.fits();
  field.values.reserve(rows.size());
  field.flags.reserve(rows.size());

  const double floor = grid.degeneracy_floor();
  const auto* lra = std::get_if<RiskAdjusted>(&kind);
  if (lra) check_beta(lra->beta);

  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    VectorXd values(static_cast<Index>(row.size()));
    std::vector<bool> flags(row.size(), false);

    double phi = 0.0;
    if (lra) {
      phi = phi_h(grid, grid.horizons()[r]);
      field.phi.push_back(phi);
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      const auto& fit = row[i];
      const auto k = static_cast<Index>(i);
      std::visit(overloaded{[&](const LocalReturn&) { values(k) = fit.local_return; },
                            [&](const LocalRisk&) { values(k) = fit.local_risk; },
                            [&](const LocalSharpe&) {
                              const auto s = local_sharpe(fit, floor);
                              values(k) = s ? *s : std::nan("");
                              flags[i] = !s;
                            },
                            [&](const RiskAdjusted& m) { values(k) = local_rar(fit, m.beta, phi); }},
                 kind);
    }
    field.values.push_back(std::move(values));
    field.flags.push_back(std::move(flags));
  }

  if (lra && lra->normalize) {
    double sum = 0.0;
    double count = 0.0;
    for (const auto& v : field.values) {
      sum += v.sum();
      count += static_cast<double>(v.size());
    }
    const double mean = sum / count;
    double ss = 0.0;
    for (const auto& v : field.values) ss += (v.array() - mean).square().sum();
    const double sd = std::sqrt(ss / count);
    if (!(sd > floor)) {
      throw Error(Errc::DegenerateNormalization, "LRA field has zero spread");
    }
    for (auto& v : field.values) v /= sd;
    field.normalization = sd;
  }
  return field;
}

}  // namespace lrd
