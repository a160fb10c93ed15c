#include "lrd/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "lrd/error.hpp"
#include "lrd/io.hpp"

namespace lrd {

namespace {

using nlohmann::json;

std::string fixed(double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", std::max(decimals, 0), value);
  std::string text(buffer);
  if (text.front() == '-' && text.find_first_not_of("-0.") == std::string::npos) text.erase(0, 1);
  return text;
}

bool recoverable_jackknife(const Error& e) {
  return e.code() == Errc::TooFewUnits || e.code() == Errc::EstimatorFailure;
}

MeasureKind measure_kind(const std::string& name, const Config& config) {
  if (name == "lsr") return LocalSharpe{};
  if (name == "lra") return RiskAdjusted{config.beta, config.normalize};
  throw Error(Errc::ConfigError, "unknown measure '" + name + "'");
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json config_json(const Config& config) {
  json c;
  c["horizons"] = config.horizons;
  c["measure"] = config.measures;
  c["beta"] = config.beta;
  c["normalize"] = config.normalize;
  c["kernel_time"] = kernel_name(config.kernel_time);
  c["kernel_scale"] = kernel_name(config.kernel_scale);
  c["rho"] = config.rho;
  c["tau"] = config.tau ? json(*config.tau) : json("last");
  c["delta_t"] = config.delta_t ? json(*config.delta_t) : json("paper");
  c["delta_s"] = config.delta_s ? json(*config.delta_s) : json("paper");
  c["annualization"] = config.annualization;
  c["jackknife_unit"] = config.jackknife_unit == JackknifeUnit::FinestBox ? "finest" : "coarsest";
  return c;
}

json series_json(const SeriesReport& report) {
  json s;
  s["name"] = report.name;
  s["checksum"] = report.checksum;
  s["n"] = report.n;
  s["sharpe"] = report.sharpe;
  s["horizons"] = report.horizons;
  json rows = json::array();
  for (const auto& row : report.rows) {
    json r;
    r["measure"] = row.measure;
    r["rho"] = row.rho;
    r["phi"] = row.phi;
    r["phi_error"] = optional_json(row.phi_error);
    r["eta"] = optional_json(row.eta);
    r["eta_error"] = optional_json(row.eta_error);
    r["jackknife_units"] = row.jackknife_units;
    r["degenerate_cells_skipped"] = row.degenerate_cells_skipped;
    r["tau"] = row.tau;
    r["delta_t"] = row.delta_t;
    r["delta_s"] = row.delta_s;
    r["warnings"] = row.warnings;
    rows.push_back(std::move(r));
  }
  s["indicators"] = std::move(rows);
  return s;
}

std::string cell(double value, const std::optional<double>& error) {
  if (!error) return format_with_error(value, std::nan(""));
  return format_with_error(value, *error);
}

}  // namespace

std::string format_with_error(double value, double error) {
  if (!std::isfinite(value)) return "nan";
  if (!std::isfinite(error) || error < 0.0) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.4g(?)", value);
    return buffer;
  }
  if (error == 0.0) return format_double(value) + "(0)";

  int decimals = -static_cast<int>(std::floor(std::log10(error)));
  double digit = std::round(error * std::pow(10.0, decimals));
  if (digit >= 10.0) {
    decimals -= 1;
    digit = std::round(error * std::pow(10.0, decimals));
  }
  if (decimals > 0) {
    return fixed(value, decimals) + "(" + fixed(digit, 0) + ")";
  }
  const double unit = std::pow(10.0, -decimals);
  return fixed(std::round(value / unit) * unit, 0) + "(" + fixed(digit * unit, 0) + ")";
}

SeriesReport analyze(const PnLSeries& series, const Config& config, const std::string& name) {
  SeriesReport report;
  report.name = name;
  report.checksum = series_checksum(series);
  report.n = series.size();
  report.horizons = config.horizons.empty() ? default_horizons(series.size()) : config.horizons;
  if (report.horizons.empty()) {
    throw Error(Errc::InvalidArgument, "series of length " + std::to_string(series.size()) +
                                           " is too short for the default horizons");
  }

  const auto grid = decompose(series, report.horizons);
  report.horizons = grid.horizons();
  report.sharpe = global_sharpe(series, config.annualization);
  const std::vector<int> rhos = config.rho.empty() ? grid.horizons() : config.rho;

  for (const auto& measure : config.measures) {
    const auto field = measure_field(grid, measure_kind(measure, config));
    for (const int rho : rhos) {
      const auto defaults = default_parameters(grid, rho);
      IndicatorRow row;
      row.measure = measure;
      row.rho = rho;
      row.tau = config.tau.value_or(defaults.tau);
      row.delta_t = config.delta_t.value_or(defaults.delta_t);
      row.delta_s = config.delta_s.value_or(defaults.delta_s);
      const Kernel time_kernel(config.kernel_time, row.tau, row.delta_t);
      const Kernel scale_kernel(config.kernel_scale, rho, row.delta_s);

      try {
        const auto phi = phi_indicator(field, scale_kernel, time_kernel, config.jackknife_unit);
        row.phi = phi.value;
        row.phi_error = phi.jackknife_error;
        row.jackknife_units = phi.jackknife_units;
        row.degenerate_cells_skipped = phi.degenerate_cells_skipped;
        row.warnings = phi.warnings;
      } catch (const Error& e) {
        if (!recoverable_jackknife(e)) throw;
        const auto phi = phi_value(field, scale_kernel, time_kernel);
        row.phi = phi.value;
        row.degenerate_cells_skipped = phi.degenerate_cells_skipped;
        row.warnings.push_back(std::string("phi jackknife unavailable: ") + e.what());
      }

      if (std::binary_search(grid.horizons().begin(), grid.horizons().end(), rho)) {
        try {
          const auto estimate = eta_estimate(field, rho, time_kernel);
          row.eta = estimate.value;
          row.eta_error = estimate.error;
        } catch (const Error& e) {
          if (e.code() == Errc::ZeroKernelMass) {
            row.warnings.push_back("eta unavailable: no kernel mass at rho");
          } else if (recoverable_jackknife(e)) {
            row.eta = eta(field, rho, time_kernel);
            row.warnings.push_back(std::string("eta jackknife unavailable: ") + e.what());
          } else {
            throw;
          }
        }
      } else {
        row.warnings.push_back("rho is not a grid horizon; eta omitted");
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

CompareReport run_compare(const PnLSeries& series_a, const PnLSeries& series_b,
                          const Config& config) {
  return CompareReport{config, analyze(series_a, config, "a"), analyze(series_b, config, "b")};
}

std::string render_text(const CompareReport& report) {
  std::ostringstream out;
  const auto& cfg = report.config;
  out << "series a: n=" << report.a.n << " checksum=" << report.a.checksum << '\n';
  out << "series b: n=" << report.b.n << " checksum=" << report.b.checksum << '\n';
  out << "kernels: scale=" << kernel_name(cfg.kernel_scale)
      << " time=" << kernel_name(cfg.kernel_time) << "  beta=" << fixed(cfg.beta, 2)
      << "  normalize=" << (cfg.normalize ? "true" : "false") << '\n';
  out << "Sharpe (annualized): " << fixed(report.a.sharpe, 4) << " / " << fixed(report.b.sharpe, 4)
      << "\n\n";

  // Rows are laid out measure-major in both reports; columns are rho.
  std::vector<int> rhos;
  for (const auto& row : report.a.rows) {
    if (std::find(rhos.begin(), rhos.end(), row.rho) == rhos.end()) rhos.push_back(row.rho);
  }
  std::vector<std::vector<std::string>> table;
  std::vector<std::string> header{""};
  for (const int rho : rhos) header.push_back("rho=" + std::to_string(rho));
  table.push_back(header);

  std::vector<std::string> warnings;
  for (const auto& measure : cfg.measures) {
    std::vector<std::string> phi_line{"Phi[" + measure + "]"};
    std::vector<std::string> eta_line{"eta[" + measure + "]"};
    for (const int rho : rhos) {
      const auto find = [&](const SeriesReport& s) -> const IndicatorRow& {
        return *std::find_if(s.rows.begin(), s.rows.end(), [&](const IndicatorRow& r) {
          return r.measure == measure && r.rho == rho;
        });
      };
      const auto& ra = find(report.a);
      const auto& rb = find(report.b);
      phi_line.push_back(cell(ra.phi, ra.phi_error) + "/" + cell(rb.phi, rb.phi_error));
      if (ra.eta && rb.eta) {
        eta_line.push_back(cell(*ra.eta, ra.eta_error) + "/" + cell(*rb.eta, rb.eta_error));
      } else {
        eta_line.push_back("-");
      }
      for (const auto* r : {&ra, &rb}) {
        for (const auto& w : r->warnings) {
          warnings.push_back((r == &ra ? "a " : "b ") + measure + " rho=" + std::to_string(rho) +
                             ": " + w);
        }
      }
    }
    table.push_back(phi_line);
    table.push_back(eta_line);
  }

  std::vector<std::size_t> widths(table.front().size(), 0);
  for (const auto& line : table) {
    for (std::size_t c = 0; c < line.size(); ++c) widths[c] = std::max(widths[c], line[c].size());
  }
  for (const auto& line : table) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      text += line[c];
      if (c + 1 < line.size()) text += std::string(widths[c] - line[c].size() + 2, ' ');
    }
    out << text << '\n';
  }
  if (!warnings.empty()) {
    out << "\nwarnings:\n";
    for (const auto& w : warnings) out << "  " << w << '\n';
  }
  return out.str();
}

std::string render_json(const CompareReport& report) {
  json doc;
  doc["config"] = config_json(report.config);
  doc["series"] = json::array({series_json(report.a), series_json(report.b)});
  return doc.dump(2) + "\n";
}

std::string render_json(const SeriesReport& report, const Config& config) {
  json doc;
  doc["config"] = config_json(config);
  doc["series"] = series_json(report);
  return doc.dump(2) + "\n";
}

}  // namespace lrd
