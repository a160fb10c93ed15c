#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "test_support.hpp"

using namespace lrd;

namespace {

Errc parse_error(const std::string& text, std::optional<std::size_t>* index = nullptr) {
  std::istringstream in(text);
  try {
    parse_csv(in);
  } catch (const Error& e) {
    if (index) *index = e.index();
    return e.code();
  }
  FAIL("expected an lrd::Error");
  return Errc::InvalidArgument;
}

PnLSeries parse(const std::string& text) {
  std::istringstream in(text);
  return parse_csv(in);
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("lrd_io_test_" + name);
}

}  // namespace

TEST_CASE("csv ingestion", "[io]") {
  SECTION("dated rows") {
    const auto s = parse("date,pnl\n2006-01-02,0.0\n2006-01-03,1.2\n");
    REQUIRE(s.size() == 2);
    REQUIRE(s[1] == 1.2);
    REQUIRE(s.labels()[0] == "2006-01-02");
  }
  SECTION("pnl-only, CRLF and a missing trailing newline") {
    const auto s = parse("pnl\r\n1\r\n2.5\r\n-3e2");
    REQUIRE(s.size() == 3);
    REQUIRE(s[2] == -300.0);
    REQUIRE_FALSE(s.has_labels());
  }
  SECTION("header only is too short") { REQUIRE(parse_error("date,pnl\n") == Errc::TooShort); }
  SECTION("non-numeric cell reports its line") {
    std::optional<std::size_t> line;
    REQUIRE(parse_error("date,pnl\n2006-01-02,0.0\n2006-01-03,abc\n", &line) == Errc::ParseError);
    REQUIRE(line == 3u);
  }
  SECTION("bad header, ragged rows and non-finite values") {
    REQUIRE(parse_error("value\n1\n2\n") == Errc::ParseError);
    REQUIRE(parse_error("") == Errc::ParseError);
    REQUIRE(parse_error("pnl\n1,2\n3\n") == Errc::ParseError);
    REQUIRE(parse_error("date,pnl\n2006-01-02\n") == Errc::ParseError);
    REQUIRE(parse_error("pnl\n1\nnan\n") == Errc::NonFinite);
    REQUIRE(parse_error("date,pnl\n2006-01-03,1\n2006-01-02,2\n") == Errc::LabelMismatch);
  }
  SECTION("missing file") {
    try {
      load_csv("/nonexistent/lrd.csv");
      FAIL("expected IoError");
    } catch (const Error& e) {
      REQUIRE(e.code() == Errc::IoError);
      REQUIRE(exit_code(e.code()) == 3);
    }
  }
}

TEST_CASE("csv round trip preserves every bit", "[io][property]") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = test::random_series(rng, 500);
    std::stringstream buffer;
    write_csv(buffer, s);
    const auto back = parse_csv(buffer);
    REQUIRE(back == s);
  }
  const auto dated = parse("date,pnl\n2006-01-02,0.1\n2006-01-03,0.30000000000000004\n");
  std::stringstream buffer;
  write_csv(buffer, dated);
  REQUIRE(buffer.str() == "date,pnl\n2006-01-02,0.1\n2006-01-03,0.30000000000000004\n");
}

TEST_CASE("field csv export", "[io]") {
  std::vector<double> x{0, 1, 0, 1, 0, 1, 2, 3};  // second box at h = 4 is affine
  const auto field = measure_field(decompose(validate(x), std::vector<int>{2, 4}), LocalSharpe{});
  std::ostringstream out;
  write_field_csv(out, field);
  const std::string text = out.str();

  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  REQUIRE(lines.front() == "h,center_t,value,flag");
  REQUIRE(lines.size() == 1 + 4 + 2);
  REQUIRE(lines.back() == "4,5.5,,1");
  REQUIRE(lines[1] == "2,0.5,,1");  // two-point boxes are always affine

  // 2 horizons x 2 boxes gives 4 data rows
  const auto small = measure_field(decompose(validate(std::vector<double>{0, 2, 1, 3, 2, 5, 4, 4}),
                                             std::vector<int>{3, 4}),
                                   LocalRisk{});
  std::ostringstream small_out;
  write_field_csv(small_out, small);
  const std::string small_text = small_out.str();
  const auto rows = std::count(small_text.begin(), small_text.end(), '\n');
  REQUIRE(rows == 1 + 4);
}

TEST_CASE("field json round trip", "[io]") {
  std::mt19937_64 rng(19);
  auto x = test::random_walk(rng, 120);
  for (std::size_t k = 110; k < 120; ++k) x[k] = 1.0;  // flag the last h = 10 box
  const auto s = validate(x);
  const auto field = measure_field(decompose(s, std::vector<int>{10, 30}), LocalSharpe{});
  const ExportMetadata meta{series_checksum(s), std::string(kGeneratorName), 77};

  const auto snapshot = to_export(field, meta);
  REQUIRE_FALSE(snapshot.values[0].back().has_value());
  REQUIRE(snapshot.flags[0].back());

  const auto text = field_json(snapshot);
  REQUIRE(text.find("null") != std::string::npos);
  const auto back = parse_field_json(text);
  REQUIRE(back == snapshot);
  for (std::size_t r = 0; r < back.values.size(); ++r) {
    for (std::size_t i = 0; i < back.values[r].size(); ++i) {
      if (back.values[r][i]) REQUIRE(*back.values[r][i] == field.values[r](static_cast<Index>(i)));
    }
  }

  const auto path = temp_path("field.json");
  export_field(field, path, ExportFormat::Json, meta);
  REQUIRE(import_field_json(path) == snapshot);
  std::filesystem::remove(path);

  REQUIRE_THROWS_AS(parse_field_json("{\"horizons\": 3}"), Error);
}

TEST_CASE("checksum tracks content", "[io]") {
  const auto a = validate(std::vector<double>{0, 1, 2});
  const auto b = validate(std::vector<double>{0, 1, 2.0000000001});
  REQUIRE(series_checksum(a) == series_checksum(validate(std::vector<double>{0, 1, 2})));
  REQUIRE(series_checksum(a) != series_checksum(b));
  REQUIRE(series_checksum(a).size() == 16);
}

TEST_CASE("csv re-import reproduces indicators", "[io][property]") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = test::random_series(rng, 600);
    const auto path = temp_path("roundtrip.csv");
    save_csv(path, s);
    const auto back = load_csv(path);
    std::filesystem::remove(path);

    const std::vector<int> hs{20, 50, 150};
    const Kernel ks(KernelShape::Gaussian, 50.0, 5000.0);
    const Kernel kt(KernelShape::Gaussian, 599.0, 149.75);
    for (const MeasureKind& kind : {MeasureKind{LocalSharpe{}}, MeasureKind{RiskAdjusted{0.75, true}}}) {
      const auto a = phi_indicator(measure_field(decompose(s, hs), kind), ks, kt);
      const auto b = phi_indicator(measure_field(decompose(back, hs), kind), ks, kt);
      REQUIRE(test::rel_close(a.value, b.value, 1e-9));
      REQUIRE(test::rel_close(a.jackknife_error, b.jackknife_error, 1e-9));
    }
  }
}
