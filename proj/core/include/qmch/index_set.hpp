#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qmch/frequency.hpp"
#include "qmch/weights.hpp"

namespace qmch {

struct Provenance {
  enum class Tag { kHyperbolic, kExplicit, kDoubled } tag = Tag::kExplicit;
  double threshold = 0.0;    // hyperbolic only: bound on r(h)^2
  std::string weight_spec;   // hyperbolic only: "alpha/gamma" description
};

/// Finite deduplicated set of frequency vectors in canonical order.
struct IndexSet {
  BasisKind kind = BasisKind::kTrig;
  std::size_t dimension = 0;
  std::vector<FrequencyVector> members;
  Provenance provenance;

  std::size_t size() const { return members.size(); }

  /// Canonical-order position of h, if present.
  std::optional<std::size_t> find(const FrequencyVector& h) const;

  static IndexSet from_members(BasisKind kind, std::size_t dimension,
                               std::vector<FrequencyVector> members);
};

inline constexpr std::size_t kDefaultCardinalityCap = 10'000'000;

/// All h with decay(h)^2 <= threshold for the matching basis. Throws
/// ResourceCapError when the enumeration exceeds `cap` members.
IndexSet enumerate_cross(std::size_t dimension, double threshold, const ProductWeights& w,
                         BasisKind kind, std::uint32_t base = 2,
                         std::size_t cap = kDefaultCardinalityCap);

/// Closed-form cardinality bound on the hyperbolic cross. Requires
/// lambda > 1/(2 alpha); the walsh form additionally needs lambda <= 1.
double cardinality_bound(std::size_t dimension, double threshold, const ProductWeights& w,
                         double lambda, BasisKind kind, std::uint32_t base = 2);

/// Minkowski sum {a + b : a, b in I} (component-wise integer addition).
IndexSet minkowski_sum(const IndexSet& set);

/// Difference set: integer {a - b} for trig; digit-wise subtraction mod base
/// for walsh, where exactness statements are phrased over such differences.
IndexSet minkowski_diff(const IndexSet& set, std::uint32_t base = 2);

std::uint64_t digitwise_sub(std::uint64_t a, std::uint64_t b, std::uint32_t base);
std::uint64_t digitwise_add(std::uint64_t a, std::uint64_t b, std::uint32_t base);

/// Line-oriented text format: header "basis d count", one vector per line.
void write_index_set(std::ostream& os, const IndexSet& set);
IndexSet read_index_set(std::istream& is);

}  // namespace qmch
