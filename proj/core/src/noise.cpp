#include "qmch/noise.hpp"

#include <cmath>
#include <numbers>

namespace qmch {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double uniform_01(std::uint64_t bits) {
  // 53 mantissa bits mapped into (0, 1]
  return (static_cast<double>(bits >> 11) + 1.0) / 9007199254740992.0;
}

}  // namespace

double gaussian_draw(std::uint64_t seed, std::uint64_t counter) {
  const std::uint64_t lane = splitmix64(seed) ^ (counter * 0xD1B54A32D192ED03ull);
  const double u1 = uniform_01(splitmix64(lane));
  const double u2 = uniform_01(splitmix64(lane + 0x632BE59BD9B4E019ull));
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double derived_sigma(const NoiseSpec& spec, const std::vector<double>& clean) {
  if (spec.no_noise()) return 0.0;
  double ms = 0.0;
  for (double v : clean) ms += v * v;
  ms /= static_cast<double>(clean.size());
  return std::sqrt(ms) / std::pow(10.0, spec.snr_db / 20.0);
}

SampleSet add_noise(const SampleSet& clean, const NoiseSpec& spec) {
  if (spec.no_noise()) return clean;
  const double sigma = derived_sigma(spec, clean.values);
  std::vector<double> noisy = clean.values;
  for (std::size_t n = 0; n < noisy.size(); ++n) {
    noisy[n] += sigma * gaussian_draw(spec.seed, n);
  }
  return SampleSet(clean.points, std::move(noisy));
}

}  // namespace qmch
