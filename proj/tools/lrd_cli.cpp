// Command-line front end: decompose, indicator, synth, compare.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lrd/lrd.hpp"

namespace {

lrd::MeasureKind parse_measure(const std::string& name, double beta, bool normalize) {
  if (name == "lsr") return lrd::LocalSharpe{};
  if (name == "lra") return lrd::RiskAdjusted{beta, normalize};
  if (name == "local_return") return lrd::LocalReturn{};
  if (name == "local_risk") return lrd::LocalRisk{};
  throw lrd::Error(lrd::Errc::InvalidArgument, "unknown measure '" + name + "'");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw lrd::Error(lrd::Errc::IoError, "cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw lrd::Error(lrd::Errc::IoError, "failed writing '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local risk decomposition of profit-and-loss series"};
  app.require_subcommand(1);

  std::string in_path;
  std::string out_path;
  std::string config_path;

  auto* decompose_cmd = app.add_subcommand("decompose", "Export a time x horizon measure field");
  std::vector<int> horizons;
  std::string measure = "lsr";
  std::string format;
  double beta = 0.75;
  bool normalize = false;
  decompose_cmd->add_option("input", in_path, "PnL csv (date,pnl or pnl)")->required();
  decompose_cmd->add_option("--horizons", horizons, "Box lengths in samples")->delimiter(',');
  decompose_cmd->add_option("--out", out_path, "Output file")->required();
  decompose_cmd->add_option("--measure", measure, "lsr, lra, local_return or local_risk")
      ->check(CLI::IsMember({"lsr", "lra", "local_return", "local_risk"}));
  decompose_cmd->add_option("--beta", beta, "Risk aversion for lra");
  decompose_cmd->add_flag("--normalize", normalize, "Divide lra by its field-wide deviation");
  decompose_cmd->add_option("--format", format, "csv or json (default: from extension)")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* indicator_cmd = app.add_subcommand("indicator", "Compute Phi and eta for one series");
  indicator_cmd->add_option("input", in_path, "PnL csv")->required();
  indicator_cmd->add_option("--config", config_path, "Key-value configuration");
  indicator_cmd->add_option("--out", out_path, "JSON report (default: stdout)");

  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic PnL series");
  std::string spec_path;
  std::optional<std::uint64_t> seed;
  synth_cmd->add_option("--spec", spec_path, "Key-value synth spec")->required();
  synth_cmd->add_option("--seed", seed, "Overrides the spec seed");
  synth_cmd->add_option("--out", out_path, "Output csv")->required();

  auto* compare_cmd = app.add_subcommand("compare", "Compare two series side by side");
  std::string in_b;
  compare_cmd->add_option("a", in_path, "First PnL csv")->required();
  compare_cmd->add_option("b", in_b, "Second PnL csv")->required();
  compare_cmd->add_option("--config", config_path, "Key-value configuration");
  compare_cmd->add_option("--out", out_path, "Also write a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const auto config = config_path.empty() ? lrd::Config{} : lrd::load_config(config_path);

    if (*decompose_cmd) {
      const auto series = lrd::load_csv(in_path);
      if (horizons.empty()) horizons = lrd::default_horizons(series.size());
      const auto grid = lrd::decompose(series, horizons);
      const auto field = lrd::measure_field(grid, parse_measure(measure, beta, normalize));
      if (format.empty()) format = out_path.ends_with(".json") ? "json" : "csv";
      lrd::export_field(field, out_path,
                        format == "json" ? lrd::ExportFormat::Json : lrd::ExportFormat::Csv,
                        lrd::ExportMetadata{lrd::series_checksum(series), std::nullopt, std::nullopt});
    } else if (*indicator_cmd) {
      const auto series = lrd::load_csv(in_path);
      const auto text = lrd::render_json(lrd::analyze(series, config, in_path), config);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        write_text(out_path, text);
      }
    } else if (*synth_cmd) {
      const auto request = lrd::load_synth_spec(spec_path, seed);
      lrd::save_csv(out_path, lrd::run_synth(request));
    } else if (*compare_cmd) {
      const auto report =
          lrd::run_compare(lrd::load_csv(in_path), lrd::load_csv(in_b), config);
      std::cout << lrd::render_text(report);
      if (!out_path.empty()) write_text(out_path, lrd::render_json(report));
    }
  } catch (const lrd::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return lrd::exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
