#pragma once

#include <cstdint>

#include "qmch/ext_real.hpp"
#include "qmch/frequency.hpp"
#include "qmch/weights.hpp"

namespace qmch {

/// Position of the most significant base-b digit of h; mu1(0) = 0.
std::uint32_t mu1(std::uint64_t h, std::uint32_t base);

/// Korobov decay prod_{h_j != 0} |h_j|^alpha / gamma_j, 1 at the zero vector,
/// the infinity sentinel when gamma_j = 0 meets h_j != 0.
ExtReal r_korobov(const FrequencyVector& h, const ProductWeights& w);

/// Walsh decay prod_{h_j != 0} b^(alpha*mu1(h_j)) / gamma_j, same conventions.
ExtReal r_walsh(const FrequencyVector& h, const ProductWeights& w, std::uint32_t base);

/// Dispatches on the frequency's basis kind.
ExtReal decay(const FrequencyVector& h, const ProductWeights& w, std::uint32_t base);

}  // namespace qmch
