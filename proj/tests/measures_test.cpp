#include <catch_amalgamated.hpp>

#include <random>

#include "test_support.hpp"

using namespace lrd;
using Catch::Approx;

namespace {

PnLSeries from_increments(const std::vector<double>& r) {
  std::vector<double> x{0.0};
  for (const double v : r) x.push_back(x.back() + v);
  return validate(x);
}

LocalFit fit_with(double r, double sigma) {
  LocalFit fit;
  fit.local_return = r;
  fit.local_risk = sigma;
  return fit;
}

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an lrd::Error");
  return Errc::InvalidArgument;
}

std::vector<double> ramp(std::size_t n, double slope) {
  std::vector<double> x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = slope * static_cast<double>(k);
  return x;
}

}  // namespace

TEST_CASE("global Sharpe ratio", "[measures]") {
  REQUIRE(global_sharpe(from_increments({1, -1, 1, -1}), 1.0) == Approx(0.0).margin(1e-15));
  REQUIRE(error_of([] { global_sharpe(from_increments({1, 1, 1, 1}), 1.0); }) == Errc::ZeroVolatility);
  // mean 2, population sd sqrt(2/3)
  REQUIRE(global_sharpe(from_increments({1, 2, 3}), 1.0) == Approx(2.0 / std::sqrt(2.0 / 3.0)).epsilon(1e-12));
  REQUIRE(global_sharpe(from_increments({1, 2, 3}), 1.0) == Approx(2.4494897).epsilon(1e-7));
  REQUIRE(global_sharpe(from_increments({1, 2, 3}), kDailyAnnualization) ==
          Approx(std::sqrt(252.0) * 2.4494897427831781));
  REQUIRE(error_of([] { global_sharpe(validate(std::vector<double>{0, 1}), 1.0); }) == Errc::TooShort);
}

TEST_CASE("global risk adjusted return", "[measures]") {
  REQUIRE(global_rar(from_increments({1, 2, 3}), 0.0) == Approx(2.0));
  REQUIRE(global_rar(from_increments({1, 2, 3}), 1.0) == Approx(2.0 - std::sqrt(2.0 / 3.0)).epsilon(1e-12));
  REQUIRE(global_rar(from_increments({1, 2, 3}), 1.0) == Approx(1.1835).epsilon(1e-4));
  for (const double beta : {0.0, 0.5, 3.0}) {
    REQUIRE(global_rar(from_increments({2.5, 2.5, 2.5, 2.5}), beta) == Approx(2.5));
  }
}

TEST_CASE("Sharpe matches a brute-force two-pass oracle", "[measures][property]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(3, 400)(rng);
    const auto s = test::random_series(rng, n);
    std::vector<double> r;
    for (Index k = 1; k < s.size(); ++k) r.push_back(s[k] - s[k - 1]);
    const auto [mean, sd] = test::mean_sd(r);
    REQUIRE(test::rel_close(global_sharpe(s, 1.0), mean / sd, 1e-9));
  }
}

TEST_CASE("phi_h averages returns over risks", "[measures]") {
  SECTION("identical boxes") {
    // Each box of [0, 2.5, 0, 2.5]-style shape shares r~ and sigma~, so phi_h = r~/sigma~.
    const auto grid = decompose(validate(std::vector<double>{0, 1, 0, 1, 0, 1, 0, 1}), std::vector<int>{4});
    REQUIRE(phi_h(grid, 4) == Approx(0.6 / std::sqrt(0.2)).epsilon(1e-12));
  }
  SECTION("antisymmetric returns cancel") {
    const auto grid = decompose(validate(std::vector<double>{0, 1, 0, 1, 1, 0, 1, 0}), std::vector<int>{4});
    REQUIRE(phi_h(grid, 4) == Approx(0.0).margin(1e-12));
  }
  SECTION("perfectly linear series") {
    const auto grid = decompose(validate(ramp(20, 0.5)), std::vector<int>{5});
    REQUIRE(error_of([&] { phi_h(grid, 5); }) == Errc::ZeroMeanRisk);
  }
  SECTION("unknown horizon") {
    const auto grid = decompose(validate(ramp(20, 0.5)), std::vector<int>{5});
    REQUIRE(error_of([&] { phi_h(grid, 6); }) == Errc::InvalidArgument);
  }
}

TEST_CASE("local Sharpe and local risk adjusted return", "[measures]") {
  REQUIRE(*local_sharpe(fit_with(0.6, std::sqrt(0.2)), 1e-12) == Approx(1.3416407865).epsilon(1e-9));
  REQUIRE(*local_sharpe(fit_with(0.3, 0.3), 1e-12) == 1.0);
  REQUIRE_FALSE(local_sharpe(fit_with(1.0, 0.0), 1e-12).has_value());
  REQUIRE_FALSE(local_sharpe(fit_with(1.0, 1e-13), 1e-12).has_value());

  REQUIRE(local_rar(fit_with(1.7, 0.4), 0.0, 123.0) == 1.7);
  REQUIRE(local_rar(fit_with(2.0, 4.0), 1.0, 0.5) == 0.0);
  REQUIRE(local_rar(fit_with(1.0, 1.0), 0.75, 1.0) == Approx(0.25));
  REQUIRE(error_of([] { local_rar(fit_with(1.0, 1.0), 0.75, std::nan("")); }) == Errc::InvalidArgument);
}

TEST_CASE("measure fields", "[measures]") {
  std::mt19937_64 rng(17);
  const auto s = test::random_series(rng, 240);
  const std::vector<int> hs{8, 20, 60};
  const auto grid = decompose(s, hs);

  SECTION("local risk of a ramp is all zero") {
    const auto ramp_grid = decompose(validate(ramp(240, 2.0)), hs);
    const auto field = measure_field(ramp_grid, LocalRisk{});
    for (const auto& row : field.values) REQUIRE(row.cwiseAbs().maxCoeff() <= 1e-12);
  }
  SECTION("shape matches the grid") {
    const auto field = measure_field(grid, LocalSharpe{});
    REQUIRE(field.values.size() == grid.fits().size());
    for (std::size_t r = 0; r < field.values.size(); ++r) {
      REQUIRE(static_cast<std::size_t>(field.values[r].size()) == grid.fits()[r].size());
      REQUIRE(field.flags[r].size() == grid.fits()[r].size());
      for (std::size_t i = 0; i < field.flags[r].size(); ++i) {
        if (!field.flags[r][i]) REQUIRE(std::isfinite(field.values[r](static_cast<Index>(i))));
      }
    }
    REQUIRE(field.flagged_count() == 0);
  }
  SECTION("normalized LRA has unit spread") {
    const auto field = measure_field(grid, RiskAdjusted{0.75, true});
    double sum = 0.0;
    double count = 0.0;
    for (const auto& v : field.values) {
      sum += v.sum();
      count += static_cast<double>(v.size());
    }
    double ss = 0.0;
    for (const auto& v : field.values) ss += (v.array() - sum / count).square().sum();
    REQUIRE(std::sqrt(ss / count) == Approx(1.0).epsilon(1e-12));
    REQUIRE(field.phi.size() == hs.size());
  }
  SECTION("LRA with beta = 0 is the local return field") {
    const auto lra = measure_field(grid, RiskAdjusted{0.0, false});
    const auto ret = measure_field(grid, LocalReturn{});
    for (std::size_t r = 0; r < lra.values.size(); ++r) REQUIRE(lra.values[r] == ret.values[r]);
  }
  SECTION("LRA propagates ZeroMeanRisk") {
    const auto ramp_grid = decompose(validate(ramp(240, 2.0)), hs);
    REQUIRE(error_of([&] { measure_field(ramp_grid, RiskAdjusted{0.75, false}); }) == Errc::ZeroMeanRisk);
    REQUIRE(error_of([&] { measure_field(grid, RiskAdjusted{-1.0, false}); }) == Errc::InvalidArgument);
  }
  SECTION("a flat box is flagged, not infinite") {
    std::vector<double> x(s.values().data(), s.values().data() + s.size());
    for (std::size_t k = 0; k < 8; ++k) x[232 + k] = 4.0;  // last box at h = 8 is constant
    const auto field = measure_field(decompose(validate(x), hs), LocalSharpe{});
    REQUIRE(field.flags[0].back());
    REQUIRE(std::isnan(field.values[0](field.values[0].size() - 1)));
    REQUIRE(field.flagged_count() == 1);
  }
}

TEST_CASE("measure fields under scaling", "[measures][property]") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> factor(0.01, 100.0);
  const std::vector<int> hs{5, 12, 30};
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = test::random_walk(rng, 150);
    const double a = factor(rng);
    std::vector<double> ax(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) ax[k] = a * x[k];
    const auto g = decompose(validate(x), hs);
    const auto ga = decompose(validate(ax), hs);

    const auto lsr = measure_field(g, LocalSharpe{});
    const auto lsr_a = measure_field(ga, LocalSharpe{});
    const auto lra = measure_field(g, RiskAdjusted{0.75, false});
    const auto lra_a = measure_field(ga, RiskAdjusted{0.75, false});
    const auto nlra = measure_field(g, RiskAdjusted{0.75, true});
    const auto nlra_a = measure_field(ga, RiskAdjusted{0.75, true});
    for (std::size_t r = 0; r < hs.size(); ++r) {
      REQUIRE(lsr.flags[r] == lsr_a.flags[r]);
      const double lra_scale = lra.values[r].cwiseAbs().maxCoeff();
      for (Index i = 0; i < lsr.values[r].size(); ++i) {
        REQUIRE(test::rel_close(lsr_a.values[r](i), lsr.values[r](i), 1e-9, 1e-9));
        REQUIRE(test::rel_close(lra_a.values[r](i), a * lra.values[r](i), 1e-9, 1e-9 * a * lra_scale));
        REQUIRE(test::rel_close(nlra_a.values[r](i), nlra.values[r](i), 1e-9, 1e-9));
      }
    }
  }
}
