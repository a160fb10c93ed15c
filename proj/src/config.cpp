#include "lrd/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "lrd/error.hpp"

namespace lrd {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

template <typename T>
T parse_scalar(const std::string& key, const std::string& text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(Errc::ConfigError, "key '" + key + "': cannot parse '" + text + "'");
  }
  return value;
}

std::vector<std::string> split_list(std::string text) {
  if (!text.empty() && text.front() == '[' && text.back() == ']') {
    text = text.substr(1, text.size() - 2);
  }
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

template <typename T>
std::vector<T> parse_list(const std::string& key, const std::string& text) {
  std::vector<T> out;
  for (const auto& item : split_list(text)) out.push_back(parse_scalar<T>(key, item));
  return out;
}

bool parse_bool(const std::string& key, const std::string& text) {
  const auto v = lower(text);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw Error(Errc::ConfigError, "key '" + key + "': expected a boolean, got '" + text + "'");
}

std::optional<double> parse_number_or(const std::string& key, const std::string& text,
                                      const std::string& keyword) {
  if (lower(text) == keyword) return std::nullopt;
  return parse_scalar<double>(key, text);
}

}  // namespace

std::map<std::string, std::string> parse_key_values(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto text = trim(line);
    if (text.empty()) continue;
    const auto eq = text.find_first_of("=:");
    if (eq == std::string::npos) {
      throw Error(Errc::ConfigError, "line " + std::to_string(line_no) + ": expected key = value",
                  line_no);
    }
    auto key = lower(trim(text.substr(0, eq)));
    auto value = trim(text.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (!out.emplace(key, value).second) {
      throw Error(Errc::ConfigError, "line " + std::to_string(line_no) + ": duplicate key '" + key + "'",
                  line_no);
    }
  }
  return out;
}

Config parse_config(std::istream& in) {
  Config config;
  for (const auto& [key, value] : parse_key_values(in)) {
    if (key == "horizons") {
      config.horizons = parse_list<int>(key, value);
    } else if (key == "measure") {
      config.measures.clear();
      for (auto m : split_list(value)) {
        m = lower(m);
        if (m != "lsr" && m != "lra") {
          throw Error(Errc::ConfigError, "measure must be lsr or lra, got '" + m + "'");
        }
        config.measures.push_back(m);
      }
      if (config.measures.empty()) throw Error(Errc::ConfigError, "measure list is empty");
    } else if (key == "beta") {
      config.beta = parse_scalar<double>(key, value);
      if (!std::isfinite(config.beta) || config.beta < 0.0) {
        throw Error(Errc::ConfigError, "beta must be finite and >= 0");
      }
    } else if (key == "normalize") {
      config.normalize = parse_bool(key, value);
    } else if (key == "kernel_time") {
      config.kernel_time = parse_kernel_shape(lower(value));
    } else if (key == "kernel_scale") {
      config.kernel_scale = parse_kernel_shape(lower(value));
    } else if (key == "rho") {
      config.rho = parse_list<int>(key, value);
    } else if (key == "tau") {
      config.tau = parse_number_or(key, value, "last");
    } else if (key == "delta_t") {
      config.delta_t = parse_number_or(key, value, "paper");
    } else if (key == "delta_s") {
      config.delta_s = parse_number_or(key, value, "paper");
    } else if (key == "annualization") {
      config.annualization = parse_scalar<double>(key, value);
    } else if (key == "jackknife_unit") {
      const auto v = lower(value);
      if (v == "finest") {
        config.jackknife_unit = JackknifeUnit::FinestBox;
      } else if (v == "coarsest") {
        config.jackknife_unit = JackknifeUnit::CoarsestBox;
      } else {
        throw Error(Errc::ConfigError, "jackknife_unit must be finest or coarsest");
      }
    } else {
      throw Error(Errc::ConfigError, "unknown key '" + key + "'");
    }
  }
  return config;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open config '" + path.string() + "'");
  return parse_config(in);
}

SynthRequest parse_synth_spec(std::istream& in, std::optional<std::uint64_t> seed_override) {
  const auto kv = parse_key_values(in);
  const auto get = [&](const std::string& key) -> std::optional<std::string> {
    const auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    return it->second;
  };
  for (const auto& [key, value] : kv) {
    static const std::vector<std::string> known{"preset", "n", "segments", "noise_amplitude",
                                                "seed", "target_sharpe", "annualization",
                                                "noise_ratio", "weak_fraction", "weak_drift"};
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw Error(Errc::ConfigError, "unknown synth key '" + key + "'");
    }
  }

  std::uint64_t seed = 0;
  if (const auto s = get("seed")) seed = parse_scalar<std::uint64_t>("seed", *s);
  if (seed_override) seed = *seed_override;

  SynthRequest request;
  if (const auto a = get("annualization")) request.annualization = parse_scalar<double>("annualization", *a);

  if (const auto preset = get("preset")) {
    PairSpec pair;
    pair.seed = seed;
    pair.annualization = request.annualization;
    if (const auto v = get("n")) pair.n = parse_scalar<Index>("n", *v);
    if (const auto v = get("noise_amplitude")) pair.green_noise = parse_scalar<double>("noise_amplitude", *v);
    if (const auto v = get("noise_ratio")) pair.noise_ratio = parse_scalar<double>("noise_ratio", *v);
    if (const auto v = get("target_sharpe")) pair.target_sharpe = parse_scalar<double>("target_sharpe", *v);
    if (const auto v = get("weak_fraction")) pair.weak_fraction = parse_scalar<double>("weak_fraction", *v);
    if (const auto v = get("weak_drift")) pair.weak_drift = parse_scalar<double>("weak_drift", *v);
    if (get("segments")) throw Error(Errc::ConfigError, "segments cannot be combined with preset");

    const auto which = lower(*preset);
    if (which != "blue" && which != "green") {
      throw Error(Errc::ConfigError, "preset must be blue or green");
    }
    // The pair is already calibrated; generate() alone reproduces it.
    const auto generated = two_series_pair(pair);
    request.spec = which == "blue" ? generated.blue_spec : generated.green_spec;
    return request;
  }

  const auto n = get("n");
  const auto noise = get("noise_amplitude");
  if (!n || !noise) throw Error(Errc::ConfigError, "synth spec needs n and noise_amplitude");
  request.spec.n = parse_scalar<Index>("n", *n);
  request.spec.noise_amplitude = parse_scalar<double>("noise_amplitude", *noise);
  request.spec.seed = seed;
  if (const auto segs = get("segments")) {
    for (const auto& item : split_list(*segs)) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) {
        throw Error(Errc::ConfigError, "segment '" + item + "' must be length:drift");
      }
      request.spec.segments.push_back(
          Segment{parse_scalar<Index>("segments", trim(item.substr(0, colon))),
                  parse_scalar<double>("segments", trim(item.substr(colon + 1)))});
    }
  } else {
    request.spec.segments = {Segment{request.spec.n - 1, get("target_sharpe") ? 1.0 : 0.0}};
  }
  for (const auto key : {"noise_ratio", "weak_fraction", "weak_drift"}) {
    if (get(key)) throw Error(Errc::ConfigError, std::string(key) + " requires a preset");
  }
  if (const auto t = get("target_sharpe")) request.target_sharpe = parse_scalar<double>("target_sharpe", *t);
  return request;
}

SynthRequest load_synth_spec(const std::filesystem::path& path,
                             std::optional<std::uint64_t> seed_override) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open synth spec '" + path.string() + "'");
  return parse_synth_spec(in, seed_override);
}

PnLSeries run_synth(const SynthRequest& request) {
  if (request.target_sharpe) {
    return generate(calibrate_realized(request.spec, *request.target_sharpe, request.annualization));
  }
  return generate(request.spec);
}

}  // namespace lrd
