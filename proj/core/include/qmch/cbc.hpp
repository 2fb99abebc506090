#pragma once

#include <optional>

#include "qmch/criteria.hpp"
#include "qmch/index_set.hpp"
#include "qmch/rank1.hpp"

namespace qmch {

/// Component-by-component search minimizing R. N must be prime; ties break to
/// the smallest candidate. Direct O(d N^2) evaluation with cached partial
/// products over the already-fixed coordinates.
Rank1Lattice cbc_r(std::uint64_t modulus, std::size_t dimension, const ProductWeights& w);

/// Same template minimizing S.
Rank1Lattice cbc_s(std::uint64_t modulus, std::size_t dimension, const ProductWeights& w);

/// Component-by-component search for the reconstruction property on the given
/// index set: each stage takes the first coprime candidate whose extended
/// vector keeps the projected residues distinct. Absent when a stage fails.
std::optional<Rank1Lattice> cbc_reconstruction(std::uint64_t modulus, std::size_t dimension,
                                               const IndexSet& set);

}  // namespace qmch
