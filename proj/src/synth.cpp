#include "lrd/synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lrd/error.hpp"

namespace lrd {

double NormalStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double NormalStream::operator()() {
  if (spare_) {
    const double z = *spare_;
    spare_.reset();
    return z;
  }
  double u = 0.0;
  double v = 0.0;
  double s = 0.0;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double factor = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * factor;
  return u * factor;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_spec(const SynthSpec& spec) {
  if (spec.n < 2) throw Error(Errc::SpecInvalid, "n must be at least 2");
  if (!std::isfinite(spec.noise_amplitude) || spec.noise_amplitude < 0.0) {
    throw Error(Errc::SpecInvalid, "noise amplitude must be finite and >= 0");
  }
  Index total = 0;
  for (const auto& seg : spec.segments) {
    if (seg.length <= 0) throw Error(Errc::SpecInvalid, "segment lengths must be positive");
    if (!std::isfinite(seg.drift)) throw Error(Errc::SpecInvalid, "segment drift must be finite");
    total += seg.length;
  }
  if (total != spec.n - 1) {
    throw Error(Errc::SpecInvalid, "segment lengths sum to " + std::to_string(total) +
                                       ", expected n - 1 = " + std::to_string(spec.n - 1));
  }
}

namespace {

VectorXd drift_profile(const SynthSpec& spec) {
  VectorXd profile(spec.n - 1);
  Index k = 0;
  for (const auto& seg : spec.segments) {
    profile.segment(k, seg.length).setConstant(seg.drift);
    k += seg.length;
  }
  return profile;
}

VectorXd noise(const SynthSpec& spec) {
  NormalStream normal(spec.seed);
  VectorXd z(spec.n - 1);
  for (Index k = 0; k < z.size(); ++k) z(k) = spec.noise_amplitude * normal();
  return z;
}

}  // namespace

PnLSeries generate(const SynthSpec& spec) {
  check_spec(spec);
  const VectorXd steps = drift_profile(spec) + noise(spec);
  VectorXd x(spec.n);
  x(0) = 0.0;
  for (Index k = 0; k < steps.size(); ++k) x(k + 1) = x(k) + steps(k);
  return validate(x);
}

double calibrate(double target_sharpe, double noise_amplitude, Index n, double annualization) {
  if (!(noise_amplitude > 0.0) || n < 2 || !(annualization > 0.0)) {
    throw Error(Errc::InvalidArgument, "calibrate needs noise > 0, n >= 2 and A > 0");
  }
  return target_sharpe * noise_amplitude / annualization;
}

SynthSpec calibrate_realized(SynthSpec shape, double target_sharpe, double annualization) {
  check_spec(shape);
  if (!(shape.noise_amplitude > 0.0) || !(annualization > 0.0)) {
    throw Error(Errc::SpecInvalid, "realized calibration needs noise > 0 and A > 0");
  }
  const VectorXd p = drift_profile(shape);
  const VectorXd z = noise(shape);
  const double count = static_cast<double>(p.size());
  const double mp = p.mean();
  const double mz = z.mean();
  if (mp == 0.0) throw Error(Errc::SpecInvalid, "drift profile has zero mean");
  const double vp = (p.array() - mp).square().sum() / count;
  const double vz = (z.array() - mz).square().sum() / count;
  const double cov = ((p.array() - mp) * (z.array() - mz)).sum() / count;

  // A (c mp + mz) = S sqrt(c^2 vp + 2 c cov + vz), squared into a c^2 + b c + d = 0.
  const double a2 = annualization * annualization;
  const double s2 = target_sharpe * target_sharpe;
  const double qa = a2 * mp * mp - s2 * vp;
  const double qb = 2.0 * (a2 * mp * mz - s2 * cov);
  const double qd = a2 * mz * mz - s2 * vz;

  std::vector<double> roots;
  if (target_sharpe == 0.0) {
    roots.push_back(-mz / mp);
  } else if (std::abs(qa) <= 1e-14 * (a2 * mp * mp + s2 * vp)) {
    if (qb != 0.0) roots.push_back(-qd / qb);
  } else {
    const double disc = qb * qb - 4.0 * qa * qd;
    if (disc >= 0.0) {
      const double root = std::sqrt(disc);
      const double q = -0.5 * (qb + std::copysign(root, qb));
      if (q != 0.0) roots.push_back(qd / q);
      roots.push_back(q / qa);
    }
  }

  const double guess = target_sharpe * std::sqrt(vz) / (annualization * mp);
  double best = std::numeric_limits<double>::quiet_NaN();
  for (const double c : roots) {
    const double mean = c * mp + mz;
    const double var = c * c * vp + 2.0 * c * cov + vz;
    if (!(var > 0.0)) continue;
    const double realized = annualization * mean / std::sqrt(var);
    if (std::abs(realized - target_sharpe) > 1e-9 * std::max(1.0, std::abs(target_sharpe))) {
      continue;
    }
    if (std::isnan(best) || std::abs(c - guess) < std::abs(best - guess)) best = c;
  }
  if (std::isnan(best)) {
    throw Error(Errc::SpecInvalid, "target Sharpe ratio is unreachable with this drift profile");
  }
  for (auto& seg : shape.segments) seg.drift *= best;
  return shape;
}

SeriesPair two_series_pair(const PairSpec& spec) {
  if (spec.n < 3 || !(spec.weak_fraction >= 0.0) || !(spec.weak_fraction < 1.0)) {
    throw Error(Errc::SpecInvalid, "pair needs n >= 3 and weak_fraction in [0, 1)");
  }
  const Index steps = spec.n - 1;
  const auto weak = static_cast<Index>(std::llround(spec.weak_fraction * static_cast<double>(steps)));

  SynthSpec blue{spec.n, {}, spec.green_noise * spec.noise_ratio, splitmix64(spec.seed)};
  if (weak > 0) {
    blue.segments = {{steps - weak, 1.0}, {weak, spec.weak_drift}};
  } else {
    blue.segments = {{steps, 1.0}};
  }
  SynthSpec green{spec.n, {{steps, 1.0}}, spec.green_noise, splitmix64(splitmix64(spec.seed))};

  blue = calibrate_realized(blue, spec.target_sharpe, spec.annualization);
  green = calibrate_realized(green, spec.target_sharpe, spec.annualization);
  return SeriesPair{blue, green, generate(blue), generate(green)};
}

}  // namespace lrd
