#include "expressivity/targets.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

#include "expressivity/error.hpp"

namespace expressivity {

namespace {

__extension__ typedef unsigned __int128 u128;

// Phases b^k x mod 2 for k = 0..terms, computed exactly when x = m / 2^s with
// s small enough for 128-bit arithmetic and b a small integer.
bool exact_phases(double x, double b, std::size_t terms, std::vector<double>& phases) {
  if (b != std::floor(b) || b >= 64.0 || !std::isfinite(x) || x < 0.0) return false;
  if (x == 0.0) {
    phases.assign(terms + 1, 0.0);
    return true;
  }
  int e = 0;
  const double f = std::frexp(x, &e);  // x = f * 2^e, f in [0.5, 1)
  auto m = static_cast<std::uint64_t>(std::ldexp(f, 53));
  int s = 53 - e;
  while (s > 0 && (m & 1U) == 0) {
    m >>= 1;
    --s;
  }
  if (s < 0 || s > 120) return false;
  const u128 mask = (u128{1} << (s + 1)) - 1;  // mod 2 * 2^s
  const auto base = static_cast<u128>(b);
  u128 cur = static_cast<u128>(m) & mask;
  phases.resize(terms + 1);
  for (std::size_t k = 0; k <= terms; ++k) {
    phases[k] = std::ldexp(static_cast<double>(cur), -s);
    cur = (cur * base) & mask;
  }
  return true;
}

}  // namespace

TargetFunction TargetFunction::weierstrass(double a, double b, std::size_t terms) {
  TargetFunction t{Kind::Weierstrass, a, b, terms};
  t.validate();
  return t;
}

void TargetFunction::validate() const {
  if (kind == Kind::Sin4Pi) return;
  if (!(amplitude_ratio > 0.0 && amplitude_ratio < 1.0)) {
    throw ConfigError("weierstrass amplitude ratio a must lie in (0, 1)");
  }
  if (!(frequency_base > 1.0)) throw ConfigError("weierstrass frequency base b must exceed 1");
  const double tail = std::pow(amplitude_ratio, static_cast<double>(terms + 1)) / (1.0 - amplitude_ratio);
  if (!(tail < 1e-9)) {
    throw ConfigError("weierstrass truncation tail a^(K+1)/(1-a) must be below 1e-9; increase terms");
  }
}

std::string TargetFunction::name() const { return kind == Kind::Sin4Pi ? "sin4pi" : "weierstrass"; }

double TargetFunction::operator()(double x) const {
  using std::numbers::pi;
  if (kind == Kind::Sin4Pi) return std::sin(4.0 * pi * x);
  thread_local std::vector<double> phases;
  double sum = 0.0;
  double amp = 1.0;
  if (exact_phases(x, frequency_base, terms, phases)) {
    for (std::size_t k = 0; k <= terms; ++k) {
      sum += amp * std::cos(pi * phases[k]);
      amp *= amplitude_ratio;
    }
    return sum;
  }
  double freq = 1.0;
  for (std::size_t k = 0; k <= terms; ++k) {
    sum += amp * std::cos(freq * pi * x);
    amp *= amplitude_ratio;
    freq *= frequency_base;
  }
  return sum;
}

std::vector<double> TargetFunction::sample(std::span<const double> xs) const {
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back((*this)(x));
  return out;
}

TargetFunction target_from_name(const std::string& name) {
  if (name == "sin4pi" || name == "sin") return TargetFunction::sin4pi();
  if (name == "weierstrass") return TargetFunction::weierstrass();
  throw ConfigError("unknown target '" + name + "'");
}

}  // namespace expressivity
