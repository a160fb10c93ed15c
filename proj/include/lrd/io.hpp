#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lrd/measures.hpp"

namespace lrd {

// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

// CSV with header `date,pnl` or `pnl`, one sample per row.
PnLSeries parse_csv(std::istream& in);
PnLSeries load_csv(const std::filesystem::path& path);

void write_csv(std::ostream& out, const PnLSeries& series);
void save_csv(const std::filesystem::path& path, const PnLSeries& series);

// FNV-1a over the IEEE-754 bytes of the values, as 16 hex digits.
std::string series_checksum(const PnLSeries& series);

struct ExportMetadata {
  std::string source_checksum;
  std::optional<std::string> generator;
  std::optional<std::uint64_t> seed;

  bool operator==(const ExportMetadata&) const = default;
};

// Serializable snapshot of a MeasureField; flagged cells have no value.
struct GridExport {
  std::vector<int> horizons;
  std::vector<std::vector<double>> time_centers;
  std::vector<std::vector<std::optional<double>>> values;
  std::vector<std::vector<bool>> flags;
  std::string measure;
  double beta = 0.0;
  bool normalize = false;
  ExportMetadata metadata;

  bool operator==(const GridExport&) const = default;
};

GridExport to_export(const MeasureField& field, const ExportMetadata& metadata = {});

enum class ExportFormat { Csv, Json };

// CSV rows: h, center_t, value (empty when flagged), flag.
void write_field_csv(std::ostream& out, const MeasureField& field);
std::string field_json(const GridExport& grid);
GridExport parse_field_json(const std::string& text);

void export_field(const MeasureField& field, const std::filesystem::path& path, ExportFormat format,
                  const ExportMetadata& metadata = {});
GridExport import_field_json(const std::filesystem::path& path);

}  // namespace lrd
