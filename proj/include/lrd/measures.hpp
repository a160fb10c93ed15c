#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lrd/decomposition.hpp"

namespace lrd {

// Annualization presets for the global Sharpe ratio.
inline const double kDailyAnnualization = std::sqrt(252.0);
inline const double kMonthlyAnnualization = std::sqrt(12.0);

struct LocalReturn {};
struct LocalRisk {};
struct LocalSharpe {};
struct RiskAdjusted {
  double beta = 0.75;      // risk aversion, finite and >= 0
  bool normalize = false;  // divide by the field-wide standard deviation
};

using MeasureKind = std::variant<LocalReturn, LocalRisk, LocalSharpe, RiskAdjusted>;

// "local_return", "local_risk", "lsr" or "lra".
std::string measure_name(const MeasureKind& kind);

// A scalar measure over every (horizon, box) cell of a grid. Flagged cells carry NaN.
struct MeasureField {
  LRDGrid grid;
  MeasureKind kind;
  std::vector<VectorXd> values;
  std::vector<std::vector<bool>> flags;
  std::vector<double> phi;          // per-horizon scaling factor (LRA only)
  double normalization = 1.0;       // global divisor applied to LRA cells

  std::size_t flagged_count() const;
};

// Mean / population standard deviation of increments, times A.
double global_sharpe(const PnLSeries& series, double annualization);
double global_rar(const PnLSeries& series, double beta);

// Same measures on raw increments; `floor` guards the Sharpe denominator.
double sharpe_ratio(const VectorXd& increments, double annualization, double floor);
double risk_adjusted_return(const VectorXd& increments, double beta);

// <r~>_M / <sigma~>_M at horizon h. Signed.
double phi_h(const LRDGrid& grid, int h);

// r~ / sigma~, or nullopt when sigma~ <= floor.
std::optional<double> local_sharpe(const LocalFit& fit, double floor);
double local_rar(const LocalFit& fit, double beta, double phi);

MeasureField measure_field(const LRDGrid& grid, const MeasureKind& kind);

}  // namespace lrd
