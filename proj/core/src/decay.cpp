#include "qmch/decay.hpp"

#include <cmath>

namespace qmch {

std::uint32_t mu1(std::uint64_t h, std::uint32_t base) {
  if (base < 2) throw ConfigError("mu1 requires base >= 2");
  std::uint32_t c = 0;
  while (h != 0) {
    h /= base;
    ++c;
  }
  return c;
}

ExtReal r_korobov(const FrequencyVector& h, const ProductWeights& w) {
  if (h.kind != BasisKind::kTrig) throw ConfigError("r_korobov expects a trig frequency");
  double prod = 1.0;
  for (std::size_t j = 0; j < h.comps.size(); ++j) {
    const std::int64_t hj = h.comps[j];
    if (hj == 0) continue;
    const double gj = w.gamma(j + 1);
    if (gj == 0.0) return ExtReal::infinity();
    prod *= std::pow(std::abs(static_cast<double>(hj)), w.alpha()) / gj;
  }
  return ExtReal(prod);
}

ExtReal r_walsh(const FrequencyVector& h, const ProductWeights& w, std::uint32_t base) {
  if (h.kind != BasisKind::kWalsh) throw ConfigError("r_walsh expects a walsh frequency");
  h.validate();
  double prod = 1.0;
  for (std::size_t j = 0; j < h.comps.size(); ++j) {
    const std::int64_t hj = h.comps[j];
    if (hj == 0) continue;
    const double gj = w.gamma(j + 1);
    if (gj == 0.0) return ExtReal::infinity();
    const auto m = mu1(static_cast<std::uint64_t>(hj), base);
    prod *= std::pow(static_cast<double>(base), w.alpha() * m) / gj;
  }
  return ExtReal(prod);
}

ExtReal decay(const FrequencyVector& h, const ProductWeights& w, std::uint32_t base) {
  return h.kind == BasisKind::kTrig ? r_korobov(h, w) : r_walsh(h, w, base);
}

}  // namespace qmch
