#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "qmch/hyperinterp.hpp"

namespace qmch {

/// Deterministic counter-based standard-normal draw: same (seed, counter)
/// always yields the same bits on every platform.
double gaussian_draw(std::uint64_t seed, std::uint64_t counter);

struct NoiseSpec {
  double snr_db = std::numeric_limits<double>::infinity();  // +inf means no noise
  std::uint64_t seed = 0;

  bool no_noise() const { return !(snr_db < std::numeric_limits<double>::infinity()); }
};

/// sigma = rms(clean) / 10^(snr_db/20).
double derived_sigma(const NoiseSpec& spec, const std::vector<double>& clean);

/// Adds i.i.d. N(0, sigma^2) draws from the seeded counter-based generator.
SampleSet add_noise(const SampleSet& clean, const NoiseSpec& spec);

}  // namespace qmch
