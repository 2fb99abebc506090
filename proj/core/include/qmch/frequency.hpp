#pragma once

#include <cstdint>
#include <vector>

#include "qmch/errors.hpp"

namespace qmch {

enum class BasisKind { kTrig, kWalsh };

/// d-dimensional integer frequency vector. Walsh frequencies are non-negative.
struct FrequencyVector {
  BasisKind kind = BasisKind::kTrig;
  std::vector<std::int64_t> comps;

  std::size_t dim() const { return comps.size(); }

  void validate() const {
    if (kind == BasisKind::kWalsh) {
      for (auto c : comps)
        if (c < 0) throw ConfigError("walsh frequencies must be non-negative");
    }
  }

  friend bool operator==(const FrequencyVector& a, const FrequencyVector& b) {
    return a.kind == b.kind && a.comps == b.comps;
  }
};

/// Canonical component order: magnitude first, negative before positive at
/// equal magnitude. Index sets sort lexicographically under this key.
inline bool canonical_component_less(std::int64_t a, std::int64_t b) {
  const std::uint64_t ma = a < 0 ? static_cast<std::uint64_t>(-a) : static_cast<std::uint64_t>(a);
  const std::uint64_t mb = b < 0 ? static_cast<std::uint64_t>(-b) : static_cast<std::uint64_t>(b);
  if (ma != mb) return ma < mb;
  return a < b;
}

inline bool canonical_less(const FrequencyVector& a, const FrequencyVector& b) {
  const std::size_t n = std::min(a.comps.size(), b.comps.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.comps[i] != b.comps[i]) return canonical_component_less(a.comps[i], b.comps[i]);
  }
  return a.comps.size() < b.comps.size();
}

}  // namespace qmch
