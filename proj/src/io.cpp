#include "lrd/io.hpp"

#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lrd/error.hpp"

namespace lrd {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text, std::size_t line) {
  text = trim(text);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(Errc::ParseError,
                "line " + std::to_string(line) + ": '" + std::string(text) + "' is not a number",
                line);
  }
  return value;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot open '" + path.string() + "' for writing");
  return out;
}

void finish_write(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(Errc::IoError, "failed writing '" + path.string() + "'");
}

using nlohmann::json;

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

PnLSeries parse_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool has_dates = false;

  if (!std::getline(in, line)) throw Error(Errc::ParseError, "line 1: missing header", 1);
  ++line_no;
  std::string_view header = trim(line);
  if (header.starts_with("\xEF\xBB\xBF")) header.remove_prefix(3);
  if (header == "date,pnl") {
    has_dates = true;
  } else if (header != "pnl") {
    throw Error(Errc::ParseError, "line 1: expected header 'date,pnl' or 'pnl'", 1);
  }

  std::vector<double> values;
  std::vector<std::string> dates;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = trim(line);
    if (row.empty()) continue;
    if (has_dates) {
      const auto comma = row.find(',');
      if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos) {
        throw Error(Errc::ParseError,
                    "line " + std::to_string(line_no) + ": expected 2 columns", line_no);
      }
      dates.emplace_back(trim(row.substr(0, comma)));
      values.push_back(parse_number(row.substr(comma + 1), line_no));
    } else {
      if (row.find(',') != std::string_view::npos) {
        throw Error(Errc::ParseError,
                    "line " + std::to_string(line_no) + ": expected 1 column", line_no);
      }
      values.push_back(parse_number(row, line_no));
    }
  }
  if (in.bad()) throw Error(Errc::IoError, "read failure");

  if (has_dates) return validate(values, std::move(dates));
  return validate(values);
}

PnLSeries load_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open '" + path.string() + "'");
  return parse_csv(in);
}

void write_csv(std::ostream& out, const PnLSeries& series) {
  out << (series.has_labels() ? "date,pnl\n" : "pnl\n");
  for (Index k = 0; k < series.size(); ++k) {
    if (series.has_labels()) out << series.labels()[static_cast<std::size_t>(k)] << ',';
    out << format_double(series[k]) << '\n';
  }
}

void save_csv(const std::filesystem::path& path, const PnLSeries& series) {
  auto out = open_for_write(path);
  write_csv(out, series);
  finish_write(out, path);
}

std::string series_checksum(const PnLSeries& series) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (Index k = 0; k < series.size(); ++k) {
    const double v = series[k];
    unsigned char bytes[sizeof(double)];
    std::memcpy(bytes, &v, sizeof v);
    for (const unsigned char b : bytes) {
      hash ^= b;
      hash *= 0x100000001b3ULL;
    }
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

GridExport to_export(const MeasureField& field, const ExportMetadata& metadata) {
  GridExport out;
  out.horizons = field.grid.horizons();
  out.measure = measure_name(field.kind);
  if (const auto* lra = std::get_if<RiskAdjusted>(&field.kind)) {
    out.beta = lra->beta;
    out.normalize = lra->normalize;
  }
  out.metadata = metadata;
  for (std::size_t r = 0; r < field.values.size(); ++r) {
    const auto& fits = field.grid.fits()[r];
    std::vector<double> centers;
    std::vector<std::optional<double>> values;
    for (std::size_t i = 0; i < fits.size(); ++i) {
      centers.push_back(fits[i].center_t);
      if (field.flags[r][i]) {
        values.emplace_back(std::nullopt);
      } else {
        values.emplace_back(field.values[r](static_cast<Index>(i)));
      }
    }
    out.time_centers.push_back(std::move(centers));
    out.values.push_back(std::move(values));
    out.flags.push_back(field.flags[r]);
  }
  return out;
}

void write_field_csv(std::ostream& out, const MeasureField& field) {
  out << "h,center_t,value,flag\n";
  for (std::size_t r = 0; r < field.values.size(); ++r) {
    const int h = field.grid.horizons()[r];
    const auto& fits = field.grid.fits()[r];
    for (std::size_t i = 0; i < fits.size(); ++i) {
      const bool flagged = field.flags[r][i];
      out << h << ',' << format_double(fits[i].center_t) << ',';
      if (!flagged) out << format_double(field.values[r](static_cast<Index>(i)));
      out << ',' << (flagged ? 1 : 0) << '\n';
    }
  }
}

std::string field_json(const GridExport& grid) {
  json doc;
  doc["horizons"] = grid.horizons;
  doc["time_centers"] = grid.time_centers;
  json values = json::array();
  for (const auto& row : grid.values) {
    json jrow = json::array();
    for (const auto& v : row) jrow.push_back(v ? json(*v) : json(nullptr));
    values.push_back(std::move(jrow));
  }
  doc["values"] = std::move(values);
  doc["flags"] = grid.flags;

  json meta;
  meta["measure"] = grid.measure;
  meta["beta"] = grid.beta;
  meta["normalize"] = grid.normalize;
  meta["source_checksum"] = grid.metadata.source_checksum;
  meta["generator"] = grid.metadata.generator ? json(*grid.metadata.generator) : json(nullptr);
  meta["seed"] = grid.metadata.seed ? json(*grid.metadata.seed) : json(nullptr);
  doc["metadata"] = std::move(meta);
  return doc.dump(2) + "\n";
}

GridExport parse_field_json(const std::string& text) {
  GridExport out;
  try {
    const json doc = json::parse(text);
    out.horizons = doc.at("horizons").get<std::vector<int>>();
    out.time_centers = doc.at("time_centers").get<std::vector<std::vector<double>>>();
    for (const auto& jrow : doc.at("values")) {
      std::vector<std::optional<double>> row;
      for (const auto& v : jrow) {
        row.push_back(v.is_null() ? std::nullopt : std::optional<double>(v.get<double>()));
      }
      out.values.push_back(std::move(row));
    }
    out.flags = doc.at("flags").get<std::vector<std::vector<bool>>>();
    const auto& meta = doc.at("metadata");
    out.measure = meta.at("measure").get<std::string>();
    out.beta = meta.at("beta").get<double>();
    out.normalize = meta.at("normalize").get<bool>();
    out.metadata.source_checksum = meta.at("source_checksum").get<std::string>();
    if (!meta.at("generator").is_null()) out.metadata.generator = meta["generator"].get<std::string>();
    if (!meta.at("seed").is_null()) out.metadata.seed = meta["seed"].get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("grid json: ") + e.what());
  }
  return out;
}

void export_field(const MeasureField& field, const std::filesystem::path& path, ExportFormat format,
                  const ExportMetadata& metadata) {
  auto out = open_for_write(path);
  if (format == ExportFormat::Csv) {
    write_field_csv(out, field);
  } else {
    out << field_json(to_export(field, metadata));
  }
  finish_write(out, path);
}

GridExport import_field_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_field_json(buffer.str());
}

}  // namespace lrd
